#include "hsbm/gch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsbm {

namespace {

constexpr double kIntervalTol = 1e-12;  // well inside the 1e-10 value budget
constexpr int kMaxIters = 200;

// Golden-section maximization on [lo, hi] of a concave function.
std::pair<double, double> golden_max(const std::vector<double>& mu_i,
                                     const std::vector<double>& mu_j,
                                     double lo, double hi) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = gch_objective(mu_i, mu_j, c);
  double fd = gch_objective(mu_i, mu_j, d);
  for (int it = 0; it < kMaxIters && (b - a) > kIntervalTol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = gch_objective(mu_i, mu_j, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = gch_objective(mu_i, mu_j, d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, gch_objective(mu_i, mu_j, t)};
}

}  // namespace

double gch_objective(const std::vector<double>& mu_i,
                     const std::vector<double>& mu_j, double t) {
  double sum = 0.0;
  for (std::size_t m = 0; m < mu_i.size(); ++m) {
    const double a = mu_i[m];
    const double b = mu_j[m];
    double cross;
    if (t <= 0.0) {
      cross = b;  // mu_i^0 = 1 (also for mu_i = 0)
    } else if (t >= 1.0) {
      cross = a;
    } else if (a > 0.0 && b > 0.0) {
      cross = std::exp(t * std::log(a) + (1.0 - t) * std::log(b));
    } else {
      cross = 0.0;  // 0^t = 0 for t in (0,1)
    }
    sum += t * a + (1.0 - t) * b - cross;
  }
  return sum;
}

double stationarity_residual(const std::vector<double>& mu_i,
                             const std::vector<double>& mu_j, double t) {
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t m = 0; m < mu_i.size(); ++m) {
    const double a = mu_i[m];
    const double b = mu_j[m];
    if (!(a > 0.0) || !(b > 0.0))
      throw std::invalid_argument("stationarity_residual: profiles must be positive");
    lhs += std::exp(t * std::log(a) + (1.0 - t) * std::log(b)) * std::log(a / b);
    rhs += a - b;
  }
  return lhs - rhs;
}

GchResult gch_divergence(int i, int j, const ModelParams& params) {
  if (i == j) throw std::invalid_argument("gch_divergence: i == j is undefined");
  if (i < 0 || j < 0 || i >= params.k || j >= params.k)
    throw std::out_of_range("gch_divergence: community index out of range");
  const ModelTables tables(params);
  const std::vector<double> weights = normalized_weights(params, tables);
  const std::vector<double> mu_i =
      degree_profile(i, params, tables, weights).mu;
  const std::vector<double> mu_j =
      degree_profile(j, params, tables, weights).mu;

  bool has_zero = false;
  for (std::size_t m = 0; m < mu_i.size(); ++m)
    if (!(mu_i[m] > 0.0) || !(mu_j[m] > 0.0)) has_zero = true;

  double best_t, best_v;
  if (!has_zero) {
    std::tie(best_t, best_v) = golden_max(mu_i, mu_j, 0.0, 1.0);
  } else {
    // Zeros can degenerate concavity at the endpoints; scan the interior on
    // a 1e-4 grid, then refine the best bracket (the objective is still
    // concave on the open interval).
    constexpr double step = 1e-4;
    best_t = step;
    best_v = gch_objective(mu_i, mu_j, best_t);
    for (int g = 2; g * step < 1.0; ++g) {
      const double t = g * step;
      const double v = gch_objective(mu_i, mu_j, t);
      if (v > best_v) {
        best_v = v;
        best_t = t;
      }
    }
    const double lo = std::max(best_t - step, step / 2);
    const double hi = std::min(best_t + step, 1.0 - step / 2);
    const auto [t_ref, v_ref] = golden_max(mu_i, mu_j, lo, hi);
    if (v_ref > best_v) {
      best_v = v_ref;
      best_t = t_ref;
    }
  }
  // The endpoints always evaluate directly; they dominate only in the
  // degenerate all-equal case where everything is 0.
  for (const double t : {0.0, 1.0}) {
    const double v = gch_objective(mu_i, mu_j, t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  return {best_v, best_t, {i, j}};
}

GchResult gch_threshold(const ModelParams& params) {
  if (params.k < 2) throw std::invalid_argument("gch_threshold: k must be >= 2");
  GchResult best;
  bool first = true;
  for (int i = 0; i < params.k; ++i) {
    for (int j = i + 1; j < params.k; ++j) {
      const GchResult r = gch_divergence(i, j, params);
      if (first || r.value < best.value) {
        best = r;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace hsbm
