#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hsbm {

// A community assignment vector: entry s counts how many nodes of a subset
// fall in community s. Vectors of order d describe whole hyperedges, vectors
// of order d-1 describe the companions of a fixed node.
using AssignmentVec = std::vector<int>;

// All length-k nonnegative integer vectors summing to `order`, in descending
// lexicographic order. Count is C(order+k-1, k-1).
std::vector<AssignmentVec> enumerate_assignments(int k, int order);

// Returns a copy of `m` with entry `i` incremented. Throws on i out of range.
AssignmentVec oplus(const AssignmentVec& m, int i);

// Enumerated assignment vectors of one order plus O(k*order) arithmetic
// ranking into that enumeration (no hashing; used in sampler hot loops).
class AssignmentTable {
 public:
  AssignmentTable() = default;
  AssignmentTable(int k, int order);

  int k() const { return k_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(vecs_.size()); }
  const AssignmentVec& at(int idx) const { return vecs_[idx]; }
  const std::vector<AssignmentVec>& all() const { return vecs_; }

  // Rank of `counts` (which must sum to order()) in the enumeration.
  int rank(std::span<const int> counts) const;

 private:
  int k_ = 0;
  int order_ = 0;
  std::vector<AssignmentVec> vecs_;
  // comp_count_[m * (k_+1) + parts] = number of compositions of m into
  // `parts` nonnegative parts, i.e. C(m+parts-1, parts-1).
  std::vector<std::int64_t> comp_count_;
};

}  // namespace hsbm
