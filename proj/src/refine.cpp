#include "hsbm/refine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsbm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<std::int64_t> count_incident_indexed(
    const Hypergraph& g2, const std::vector<int>& labels, std::int32_t v,
    const std::vector<std::size_t>& edge_ids, const ModelTables& tables,
    std::vector<int>& scratch) {
  std::vector<std::int64_t> x(tables.companion_table.size(), 0);
  for (const std::size_t e : edge_ids) {
    const auto t = g2.edge(e);
    std::fill(scratch.begin(), scratch.end(), 0);
    for (const std::int32_t u : t)
      if (u != v) ++scratch[labels[u]];
    ++x[tables.companion_table.rank(scratch)];
  }
  return x;
}

std::vector<double> totals_from_counts(const std::vector<std::int64_t>& class_counts,
                                       int own_class, double scale,
                                       const ModelTables& tables) {
  std::vector<double> totals(tables.companion_table.size());
  const int k = static_cast<int>(class_counts.size());
  for (int m = 0; m < tables.companion_table.size(); ++m) {
    const AssignmentVec& vec = tables.companion_table.at(m);
    double count = 1.0;
    for (int s = 0; s < k && count > 0.0; ++s) {
      std::int64_t avail = class_counts[s] - (s == own_class);
      for (int j = 0; j < vec[s]; ++j, --avail)
        count *= static_cast<double>(std::max<std::int64_t>(avail, 0)) /
                 static_cast<double>(j + 1);
    }
    totals[m] = scale * count;
  }
  return totals;
}

template <typename RunNode>
std::vector<int> refine_pass(const Hypergraph& g2, const std::vector<int>& initial,
                             const ModelParams& params, double gamma_n,
                             RunNode&& run_loop) {
  validate(params);
  if (static_cast<std::int64_t>(initial.size()) != params.n)
    throw std::invalid_argument("refine_all: label length != n");
  const ModelTables tables(params);
  const double scale = 1.0 - gamma_n / std::log(static_cast<double>(params.n));
  if (!(scale > 0.0 && scale <= 1.0))
    throw std::invalid_argument("refine_all: gamma_n/log(n) outside (0,1)");

  std::vector<std::vector<std::size_t>> incident(params.n);
  for (std::size_t e = 0; e < g2.edge_count(); ++e)
    for (const std::int32_t u : g2.edge(e)) incident[u].push_back(e);

  std::vector<std::int64_t> class_counts(params.k, 0);
  for (const int z : initial) ++class_counts[z];

  std::vector<int> out(params.n);
  run_loop(params.n, [&](std::int64_t v, std::vector<int>& scratch) {
    IncidentCounts counts;
    counts.node = static_cast<std::int32_t>(v);
    counts.present = count_incident_indexed(g2, initial, counts.node,
                                            incident[v], tables, scratch);
    counts.totals = totals_from_counts(class_counts, initial[v], scale, tables);
    out[v] = map_refine(counts, params, tables);
  });
  return out;
}

}  // namespace

std::vector<std::int64_t> count_incident(const Hypergraph& g2,
                                         const std::vector<int>& labels,
                                         std::int32_t v, int k) {
  const AssignmentTable companions(k, g2.d - 1);
  std::vector<std::int64_t> x(companions.size(), 0);
  std::vector<int> scratch(k);
  for (std::size_t e = 0; e < g2.edge_count(); ++e) {
    const auto t = g2.edge(e);
    bool has_v = false;
    for (const std::int32_t u : t) has_v |= (u == v);
    if (!has_v) continue;
    std::fill(scratch.begin(), scratch.end(), 0);
    for (const std::int32_t u : t)
      if (u != v) ++scratch[labels[u]];
    ++x[companions.rank(scratch)];
  }
  return x;
}

std::vector<double> effective_totals(const std::vector<int>& labels,
                                     std::int32_t v, double gamma_n,
                                     const ModelParams& params) {
  const ModelTables tables(params);
  const double scale = 1.0 - gamma_n / std::log(static_cast<double>(params.n));
  std::vector<std::int64_t> class_counts(params.k, 0);
  for (const int z : labels) ++class_counts[z];
  return totals_from_counts(class_counts, labels[v], scale, tables);
}

int map_refine(const IncidentCounts& counts, const ModelParams& params,
               const ModelTables& tables) {
  const int k = params.k;
  int best = -1;
  double best_score = kNegInf;
  for (int i = 0; i < k; ++i) {
    double score = std::log(params.p[i]);
    for (int m = 0; m < tables.companion_table.size(); ++m) {
      const double q = params.edge_prob(
          params.rates[tables.oplus_rank[static_cast<std::size_t>(m) * k + i]]);
      const std::int64_t x = counts.present[m];
      if (x > 0) {
        if (q <= 0.0) {
          score = kNegInf;
          break;
        }
        score += static_cast<double>(x) * std::log(q);
      }
      if (q >= 1.0)
        throw std::invalid_argument("map_refine: per-edge probability not < 1");
      score += (counts.totals[m] - static_cast<double>(x)) * std::log1p(-q);
    }
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  if (best < 0)
    throw std::runtime_error(
        "map_refine: all candidates have zero posterior (inconsistent rates)");
  return best;
}

int map_refine(const IncidentCounts& counts, const ModelParams& params) {
  const ModelTables tables(params);
  return map_refine(counts, params, tables);
}

std::vector<int> refine_all(const Hypergraph& g2, const std::vector<int>& initial,
                            const ModelParams& params, double gamma_n) {
  return refine_pass(g2, initial, params, gamma_n,
                     [&](std::int64_t n, auto&& body) {
#pragma omp parallel
                       {
                         std::vector<int> scratch(params.k);
#pragma omp for schedule(static)
                         for (std::int64_t v = 0; v < n; ++v) body(v, scratch);
                       }
                     });
}

namespace serial {

std::vector<int> refine_all(const Hypergraph& g2, const std::vector<int>& initial,
                            const ModelParams& params, double gamma_n) {
  return refine_pass(g2, initial, params, gamma_n,
                     [&](std::int64_t n, auto&& body) {
                       std::vector<int> scratch(params.k);
                       for (std::int64_t v = 0; v < n; ++v) body(v, scratch);
                     });
}

}  // namespace serial

}  // namespace hsbm
