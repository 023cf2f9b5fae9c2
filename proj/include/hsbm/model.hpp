#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hsbm/assignment.hpp"

namespace hsbm {

// Parameters of the d-uniform hypergraph block model: n nodes, k communities
// with prior p, hyperedge order d, and one dimensionless rate per assignment
// vector of order d (the probability of a concrete hyperedge with assignment
// T is rates[T] * log(n) / n^(d-1)).
struct ModelParams {
  std::int64_t n = 0;
  int k = 0;
  int d = 0;
  std::vector<double> p;
  std::vector<double> rates;  // indexed by AssignmentTable(k, d) rank

  double rate_max() const;
  double rate_min() const;
  // Probability of one hyperedge with rate q: q * log(n) / n^(d-1).
  double edge_prob(double rate) const;
  ModelParams scaled(double s) const;  // every rate multiplied by s
};

// Validates all ModelParams invariants (prior sums to 1 within 1e-12 and is
// strictly positive, rate table complete and nonnegative, probabilities at
// most 1). Throws std::invalid_argument with a description on violation.
void validate(const ModelParams& params);

// Cached enumeration tables for one (k, d): assignment vectors of order d
// (whole edges) and order d-1 (companions of a node), plus the rank of
// m (+) i in the order-d table for every (m, i).
struct ModelTables {
  AssignmentTable edge_table;       // order d
  AssignmentTable companion_table;  // order d-1
  std::vector<int> oplus_rank;      // [m_idx * k + i] -> edge_table rank

  explicit ModelTables(const ModelParams& params);
};

// Normalized expected number of (d-1)-subsets with assignment m:
// prod_s C(n*p_s, m_s) / n^(d-1) with real-argument falling-factorial
// binomials; any class with n*p_s < m_s makes the whole product 0.
double normalized_weight(const AssignmentVec& m, const ModelParams& params);

// Degree profile of community i: values[m] = normalized_weight(m) * Q_{m(+)i}.
struct DegreeProfile {
  int community = 0;
  std::vector<double> mu;  // indexed by companion_table rank
};

DegreeProfile degree_profile(int i, const ModelParams& params);
DegreeProfile degree_profile(int i, const ModelParams& params,
                             const ModelTables& tables,
                             const std::vector<double>& weights);

// Normalized weights for every companion assignment, in table order.
std::vector<double> normalized_weights(const ModelParams& params,
                                       const ModelTables& tables);

// Second-order degree profile of community i: entry s is
// sum over m with m_s >= 1 of m_s * mu_{m(+)i}.
std::vector<double> second_order_profile(int i, const ModelParams& params);

struct XiResult {
  bool member = false;
  std::pair<int, int> witness{-1, -1};  // valid when member
};

// Membership in the degenerate set: true iff two communities have equal
// second-order degree profiles, componentwise at relative tolerance tol.
XiResult in_xi(const ModelParams& params, double tol = 1e-9);

}  // namespace hsbm
