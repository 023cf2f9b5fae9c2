#pragma once

#include <utility>
#include <vector>

#include "hsbm/model.hpp"

namespace hsbm {

struct GchResult {
  double value = 0.0;
  double t_star = 0.0;
  std::pair<int, int> pair_ij{-1, -1};
};

// Objective f_{i,j}(t) = sum_m [ t*mu_i + (1-t)*mu_j - mu_i^t * mu_j^(1-t) ].
// For t in (0,1) a zero in either profile kills the product term (0^t = 0);
// at the endpoints mu^0 = 1 and the sum telescopes to 0.
double gch_objective(const std::vector<double>& mu_i,
                     const std::vector<double>& mu_j, double t);

// Residual of the stationarity condition f'(t) = 0 for strictly positive
// profiles: sum_m mu_i^t mu_j^(1-t) log(mu_i/mu_j) - sum_m (mu_i - mu_j).
double stationarity_residual(const std::vector<double>& mu_i,
                             const std::vector<double>& mu_j, double t);

// Divergence between communities i and j: max of the objective over [0,1].
// Golden-section search on the concave objective for positive profiles;
// grid scan plus local refinement when either profile contains zeros.
// Throws on i == j.
GchResult gch_divergence(int i, int j, const ModelParams& params);

// Minimum divergence over all unordered pairs; ties keep the
// lexicographically smallest pair. Exact recovery threshold is value 1.
GchResult gch_threshold(const ModelParams& params);

}  // namespace hsbm
