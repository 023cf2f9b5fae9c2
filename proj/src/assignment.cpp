#include "hsbm/assignment.hpp"

#include <stdexcept>

namespace hsbm {

namespace {

void emit_descending(int remaining, int parts, AssignmentVec& prefix,
                     std::vector<AssignmentVec>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    prefix.push_back(v);
    emit_descending(remaining - v, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<AssignmentVec> enumerate_assignments(int k, int order) {
  if (k < 1) throw std::invalid_argument("enumerate_assignments: k < 1");
  if (order < 0) throw std::invalid_argument("enumerate_assignments: order < 0");
  std::vector<AssignmentVec> out;
  AssignmentVec prefix;
  prefix.reserve(k);
  emit_descending(order, k, prefix, out);
  return out;
}

AssignmentVec oplus(const AssignmentVec& m, int i) {
  if (i < 0 || i >= static_cast<int>(m.size()))
    throw std::out_of_range("oplus: community index out of range");
  AssignmentVec t = m;
  ++t[i];
  return t;
}

AssignmentTable::AssignmentTable(int k, int order)
    : k_(k), order_(order), vecs_(enumerate_assignments(k, order)) {
  comp_count_.assign(static_cast<std::size_t>(order + 1) * (k + 1), 0);
  for (int parts = 1; parts <= k; ++parts) {
    for (int m = 0; m <= order; ++m) {
      std::int64_t c = 0;  // C(m+parts-1, parts-1)
      if (parts == 1) {
        c = 1;
      } else {
        for (int v = 0; v <= m; ++v)
          c += comp_count_[static_cast<std::size_t>(m - v) * (k_ + 1) + parts - 1];
      }
      comp_count_[static_cast<std::size_t>(m) * (k_ + 1) + parts] = c;
    }
  }
}

int AssignmentTable::rank(std::span<const int> counts) const {
  int r = 0;
  int rem = order_;
  for (int s = 0; s + 1 < k_; ++s) {
    const int c = counts[s];
    for (int v = rem; v > c; --v)
      r += static_cast<int>(
          comp_count_[static_cast<std::size_t>(rem - v) * (k_ + 1) + (k_ - 1 - s)]);
    rem -= c;
  }
  return r;
}

}  // namespace hsbm
