#include "hsbm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace hsbm {

namespace {

void check_labels(const ModelParams& params, const std::vector<int>& labels) {
  if (static_cast<std::int64_t>(labels.size()) != params.n)
    throw std::invalid_argument("sampler: label vector length != n");
  for (const int z : labels)
    if (z < 0 || z >= params.k)
      throw std::invalid_argument("sampler: label out of range");
}

// Enumerates every member of one assignment class (the d-subsets whose
// community assignment is `t`) as canonical tuples. Only called for classes
// small enough to hold in memory.
void enumerate_class(const std::vector<std::vector<std::int32_t>>& members,
                     const AssignmentVec& t, std::vector<std::int32_t>& tuple,
                     int s, std::vector<std::int32_t>& out) {
  const int k = static_cast<int>(t.size());
  if (s == k) {
    std::vector<std::int32_t> sorted(tuple);
    std::sort(sorted.begin(), sorted.end());
    out.insert(out.end(), sorted.begin(), sorted.end());
    return;
  }
  if (t[s] == 0) {
    enumerate_class(members, t, tuple, s + 1, out);
    return;
  }
  const auto& pool = members[s];
  const int need = t[s];
  std::vector<int> idx(need);
  for (int j = 0; j < need; ++j) idx[j] = j;
  const int m = static_cast<int>(pool.size());
  for (;;) {
    const std::size_t base = tuple.size();
    for (int j = 0; j < need; ++j) tuple.push_back(pool[idx[j]]);
    enumerate_class(members, t, tuple, s + 1, out);
    tuple.resize(base);
    int j = need - 1;
    while (j >= 0 && idx[j] == m - need + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < need; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

std::vector<int> sample_labels(const ModelParams& params, std::uint64_t seed) {
  validate(params);
  SplitMix64 rng = make_stream(seed, kLabelStream);
  std::vector<int> labels(params.n);
  for (std::int64_t v = 0; v < params.n; ++v) {
    const double u = rng.next_double();
    double acc = 0.0;
    int z = params.k - 1;  // catch-all for cumulative rounding
    for (int i = 0; i < params.k; ++i) {
      acc += params.p[i];
      if (u < acc) {
        z = i;
        break;
      }
    }
    labels[v] = z;
  }
  return labels;
}

bool is_typical(const std::vector<int>& labels, const ModelParams& params,
                double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("is_typical: delta must be in (0,1)");
  check_labels(params, labels);
  std::vector<std::int64_t> counts(params.k, 0);
  for (const int z : labels) ++counts[z];
  const double n = static_cast<double>(params.n);
  const double band = std::pow(n, -0.5 + delta / 2.0);
  for (int j = 0; j < params.k; ++j) {
    const double expected = params.p[j] * n;
    if (counts[j] < (1.0 - band) * expected) return false;
    if (counts[j] > (1.0 + band) * expected) return false;
  }
  return true;
}

unsigned __int128 binomial_u128(std::int64_t n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  unsigned __int128 value = 1;
  for (int j = 1; j <= r; ++j) {
    const unsigned __int128 factor = static_cast<unsigned __int128>(n - r + j);
    if (factor != 0 && value > kMax / factor)
      throw std::overflow_error("binomial_u128: count exceeds 128 bits");
    value = value * factor / static_cast<unsigned __int128>(j);
  }
  return value;
}

std::uint64_t sample_binomial(unsigned __int128 n, double p, SplitMix64& rng) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return static_cast<std::uint64_t>(n);
  if (n <= 1024) {
    std::uint64_t count = 0;
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    for (std::uint64_t i = 0; i < nn; ++i)
      if (rng.next_double() < p) ++count;
    return count;
  }
  // Geometric skipping: the gap before the next success is
  // floor(log(U) / log(1-p)) with U uniform on (0,1].
  const double denom = std::log1p(-p);
  std::uint64_t count = 0;
  unsigned __int128 pos = 0;
  for (;;) {
    const double u = 1.0 - rng.next_double();
    const double gap = std::floor(std::log(u) / denom);
    if (gap >= 1e36) break;  // beyond any representable class
    pos += static_cast<unsigned __int128>(gap) + 1;
    if (pos > n) break;
    ++count;
  }
  return count;
}

SampleStrategy choose_strategy(std::int64_t n, int d, double exact_budget) {
  double log_count = std::lgamma(static_cast<double>(n) + 1) -
                     std::lgamma(static_cast<double>(d) + 1) -
                     std::lgamma(static_cast<double>(n - d) + 1);
  return log_count <= std::log(exact_budget) ? SampleStrategy::kExact
                                             : SampleStrategy::kStratified;
}

Hypergraph sample_hsbm(const ModelParams& params, const std::vector<int>& labels,
                       std::uint64_t seed, SampleStrategy strategy) {
  validate(params);
  check_labels(params, labels);
  if (params.n > std::numeric_limits<std::int32_t>::max())
    throw std::invalid_argument("sample_hsbm: n too large for node ids");
  if (params.n < params.d)
    throw std::invalid_argument("sample_hsbm: n < d leaves no candidate edges");

  const ModelTables tables(params);
  std::vector<double> probs(tables.edge_table.size());
  for (int t = 0; t < tables.edge_table.size(); ++t)
    probs[t] = params.edge_prob(params.rates[t]);

  SplitMix64 rng = make_stream(seed, kEdgeStream);
  Hypergraph g;
  g.n = params.n;
  g.d = params.d;
  const int n = static_cast<int>(params.n);
  const int d = params.d;
  const int k = params.k;

  if (strategy == SampleStrategy::kExact) {
    std::vector<std::int32_t> tuple(d);
    for (int j = 0; j < d; ++j) tuple[j] = j;
    std::vector<int> counts(k);
    for (;;) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int j = 0; j < d; ++j) ++counts[labels[tuple[j]]];
      const double prob = probs[tables.edge_table.rank(counts)];
      if (prob > 0.0 && rng.next_double() < prob) g.append_edge(tuple);
      int j = d - 1;
      while (j >= 0 && tuple[j] == n - d + j) --j;
      if (j < 0) break;
      ++tuple[j];
      for (int l = j + 1; l < d; ++l) tuple[l] = tuple[l - 1] + 1;
    }
    return g;  // lexicographic by construction
  }

  std::vector<std::vector<std::int32_t>> members(k);
  for (int v = 0; v < n; ++v) members[labels[v]].push_back(v);

  for (int t_idx = 0; t_idx < tables.edge_table.size(); ++t_idx) {
    const AssignmentVec& t = tables.edge_table.at(t_idx);
    unsigned __int128 class_size = 1;
    for (int s = 0; s < k && class_size != 0; ++s)
      class_size *= binomial_u128(static_cast<std::int64_t>(members[s].size()), t[s]);
    if (class_size == 0) continue;
    const std::uint64_t want = sample_binomial(class_size, probs[t_idx], rng);
    if (want == 0) continue;

    const bool dense = class_size <= (1u << 18) &&
                       static_cast<unsigned __int128>(want) * 8 >= class_size;
    if (dense) {
      std::vector<std::int32_t> all;
      std::vector<std::int32_t> scratch;
      enumerate_class(members, t, scratch, 0, all);
      const std::size_t total = all.size() / d;
      std::vector<std::size_t> order(total);
      for (std::size_t e = 0; e < total; ++e) order[e] = e;
      for (std::uint64_t j = 0; j < want; ++j)
        std::swap(order[j], order[j + rng.below(total - j)]);
      for (std::uint64_t j = 0; j < want; ++j)
        g.append_edge({all.data() + order[j] * d, static_cast<std::size_t>(d)});
    } else {
      std::set<std::vector<std::int32_t>> chosen;
      std::vector<std::int32_t> tuple;
      while (chosen.size() < want) {
        tuple.clear();
        for (int s = 0; s < k; ++s) {
          const int need = t[s];
          if (need == 0) continue;
          const auto& pool = members[s];
          std::vector<std::int32_t> pick;
          for (;;) {
            pick.clear();
            for (int j = 0; j < need; ++j)
              pick.push_back(pool[rng.below(pool.size())]);
            std::sort(pick.begin(), pick.end());
            if (std::adjacent_find(pick.begin(), pick.end()) == pick.end()) break;
          }
          tuple.insert(tuple.end(), pick.begin(), pick.end());
        }
        std::sort(tuple.begin(), tuple.end());
        chosen.insert(tuple);
      }
      for (const auto& e : chosen) g.append_edge(e);
    }
  }
  g.sort_edges();
  return g;
}

SplitPair split_hypergraph(const Hypergraph& g, double gamma_n,
                           std::uint64_t seed) {
  const double rate = gamma_n / std::log(static_cast<double>(g.n));
  if (!(rate > 0.0 && rate < 1.0))
    throw std::invalid_argument("split_hypergraph: gamma_n/log(n) outside (0,1)");
  SplitMix64 rng = make_stream(seed, kSplitStream);
  SplitPair pair;
  pair.gamma_n = gamma_n;
  pair.g1.n = pair.g2.n = g.n;
  pair.g1.d = pair.g2.d = g.d;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (rng.next_double() < rate)
      pair.g1.append_edge(g.edge(e));
    else
      pair.g2.append_edge(g.edge(e));
  }
  return pair;
}

}  // namespace hsbm
