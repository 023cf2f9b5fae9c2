#include "hsbm/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hsbm {

double ModelParams::rate_max() const {
  return *std::max_element(rates.begin(), rates.end());
}

double ModelParams::rate_min() const {
  return *std::min_element(rates.begin(), rates.end());
}

double ModelParams::edge_prob(double rate) const {
  return rate * std::log(static_cast<double>(n)) /
         std::pow(static_cast<double>(n), d - 1);
}

ModelParams ModelParams::scaled(double s) const {
  ModelParams out = *this;
  for (double& q : out.rates) q *= s;
  return out;
}

void validate(const ModelParams& params) {
  if (params.n < 1) throw std::invalid_argument("model: n must be positive");
  if (params.k < 2) throw std::invalid_argument("model: k must be >= 2");
  if (params.d < 2) throw std::invalid_argument("model: d must be >= 2");
  if (static_cast<int>(params.p.size()) != params.k)
    throw std::invalid_argument("model: prior length != k");
  double sum = 0.0;
  for (double pi : params.p) {
    if (!(pi > 0.0)) throw std::invalid_argument("model: prior entries must be > 0");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("model: prior must sum to 1 within 1e-12");
  const AssignmentTable edge_table(params.k, params.d);
  if (static_cast<int>(params.rates.size()) != edge_table.size())
    throw std::invalid_argument(
        "model: rate table must have one entry per assignment vector (" +
        std::to_string(edge_table.size()) + " expected, " +
        std::to_string(params.rates.size()) + " given)");
  for (double q : params.rates)
    if (!(q >= 0.0)) throw std::invalid_argument("model: rates must be >= 0");
  if (params.edge_prob(params.rate_max()) > 1.0)
    throw std::invalid_argument(
        "model: Q_max * log(n) / n^(d-1) exceeds 1; not a probability");
}

ModelTables::ModelTables(const ModelParams& params)
    : edge_table(params.k, params.d),
      companion_table(params.k, params.d - 1) {
  oplus_rank.resize(static_cast<std::size_t>(companion_table.size()) * params.k);
  for (int m = 0; m < companion_table.size(); ++m) {
    for (int i = 0; i < params.k; ++i) {
      const AssignmentVec t = oplus(companion_table.at(m), i);
      oplus_rank[static_cast<std::size_t>(m) * params.k + i] = edge_table.rank(t);
    }
  }
}

double normalized_weight(const AssignmentVec& m, const ModelParams& params) {
  // prod_s C(n p_s, m_s) / n^(d-1) computed as prod_s prod_j (p_s - j/n),
  // one factor per unit of order, divided by prod_s m_s!.
  const double n = static_cast<double>(params.n);
  double value = 1.0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    const int ms = m[s];
    if (ms == 0) continue;
    if (n * params.p[s] < static_cast<double>(ms)) return 0.0;
    for (int j = 0; j < ms; ++j)
      value *= (params.p[s] - static_cast<double>(j) / n) / static_cast<double>(j + 1);
  }
  return value;
}

std::vector<double> normalized_weights(const ModelParams& params,
                                       const ModelTables& tables) {
  std::vector<double> w(tables.companion_table.size());
  for (int m = 0; m < tables.companion_table.size(); ++m)
    w[m] = normalized_weight(tables.companion_table.at(m), params);
  return w;
}

DegreeProfile degree_profile(int i, const ModelParams& params,
                             const ModelTables& tables,
                             const std::vector<double>& weights) {
  if (i < 0 || i >= params.k)
    throw std::out_of_range("degree_profile: community index out of range");
  DegreeProfile profile;
  profile.community = i;
  profile.mu.resize(tables.companion_table.size());
  for (int m = 0; m < tables.companion_table.size(); ++m)
    profile.mu[m] =
        weights[m] *
        params.rates[tables.oplus_rank[static_cast<std::size_t>(m) * params.k + i]];
  return profile;
}

DegreeProfile degree_profile(int i, const ModelParams& params) {
  const ModelTables tables(params);
  return degree_profile(i, params, tables, normalized_weights(params, tables));
}

std::vector<double> second_order_profile(int i, const ModelParams& params) {
  const ModelTables tables(params);
  const DegreeProfile profile =
      degree_profile(i, params, tables, normalized_weights(params, tables));
  std::vector<double> out(params.k, 0.0);
  for (int m = 0; m < tables.companion_table.size(); ++m) {
    const AssignmentVec& vec = tables.companion_table.at(m);
    for (int s = 0; s < params.k; ++s)
      if (vec[s] >= 1) out[s] += vec[s] * profile.mu[m];
  }
  return out;
}

XiResult in_xi(const ModelParams& params, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("in_xi: tol must be > 0");
  std::vector<std::vector<double>> profiles(params.k);
  for (int i = 0; i < params.k; ++i)
    profiles[i] = second_order_profile(i, params);
  for (int i = 0; i < params.k; ++i) {
    for (int j = i + 1; j < params.k; ++j) {
      bool equal = true;
      for (int s = 0; s < params.k && equal; ++s) {
        const double a = profiles[i][s];
        const double b = profiles[j][s];
        if (std::abs(a - b) > tol * std::max(std::abs(a), std::abs(b)))
          equal = false;
      }
      if (equal) return {true, {i, j}};
    }
  }
  return {false, {-1, -1}};
}

}  // namespace hsbm
