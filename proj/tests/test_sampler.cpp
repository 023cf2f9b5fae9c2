#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>

#include "hsbm/sampler.hpp"

using namespace hsbm;

namespace {

ModelParams symmetric2(std::int64_t n, int d, double same, double cross) {
  ModelParams m;
  m.n = n;
  m.k = 2;
  m.d = d;
  m.p = {0.5, 0.5};
  const AssignmentTable t(2, d);
  m.rates.resize(t.size());
  for (int i = 0; i < t.size(); ++i)
    m.rates[i] = (t.at(i)[0] == d || t.at(i)[1] == d) ? same : cross;
  return m;
}

// Per-assignment-class edge counts of a sampled hypergraph.
std::vector<std::int64_t> class_counts(const Hypergraph& g,
                                       const std::vector<int>& labels, int k) {
  const AssignmentTable table(k, g.d);
  std::vector<std::int64_t> counts(table.size(), 0);
  std::vector<int> scratch(k);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (const std::int32_t v : g.edge(e)) ++scratch[labels[v]];
    ++counts[table.rank(scratch)];
  }
  return counts;
}

// Number of candidate edges per class from label multiplicities.
std::vector<double> class_sizes(const std::vector<int>& labels, int k, int d) {
  const AssignmentTable table(k, d);
  std::vector<std::int64_t> tally(k, 0);
  for (const int z : labels) ++tally[z];
  std::vector<double> sizes(table.size(), 1.0);
  for (int t = 0; t < table.size(); ++t) {
    for (int s = 0; s < k; ++s) {
      std::int64_t avail = tally[s];
      for (int j = 0; j < table.at(t)[s]; ++j, --avail)
        sizes[t] *= static_cast<double>(std::max<std::int64_t>(avail, 0)) / (j + 1);
    }
  }
  return sizes;
}

}  // namespace

TEST_CASE("sample_labels is deterministic and respects the prior") {
  ModelParams m = symmetric2(1000, 2, 4.0, 1.0);
  const auto a = sample_labels(m, 42);
  const auto b = sample_labels(m, 42);
  CHECK(a == b);
  CHECK(a != sample_labels(m, 43));

  // near-degenerate prior: everything lands in the heavy class
  m.p = {1.0 - 1e-13, 1e-13};
  const auto heavy = sample_labels(m, 7);
  for (const int z : heavy) CHECK(z == 0);
}

TEST_CASE("sample_labels empirical frequencies concentrate") {
  ModelParams m;
  m.n = 100000;
  m.k = 2;
  m.d = 2;
  m.p = {0.3, 0.7};
  m.rates = {1.0, 1.0, 1.0};
  const auto labels = sample_labels(m, 99);
  std::int64_t ones = 0;
  for (const int z : labels) ones += (z == 0);
  const double freq = static_cast<double>(ones) / m.n;
  const double band = 4.0 * std::sqrt(0.3 * 0.7 / m.n);
  CHECK(std::abs(freq - 0.3) <= band);
}

TEST_CASE("is_typical bands") {
  ModelParams m;
  m.n = 10000;
  m.k = 2;
  m.d = 2;
  m.p = {0.5, 0.5};
  m.rates = {1.0, 1.0, 1.0};

  std::vector<int> exact(m.n);
  for (std::int64_t v = 0; v < m.n; ++v) exact[v] = v < 5000 ? 0 : 1;
  CHECK(is_typical(exact, m, 0.5));

  // one community inflated to p*n*(1 + 2 n^(-1/4)): outside the delta=0.5 band
  const std::int64_t inflated =
      static_cast<std::int64_t>(5000.0 * (1.0 + 2.0 * std::pow(10000.0, -0.25)));
  std::vector<int> off(m.n);
  for (std::int64_t v = 0; v < m.n; ++v) off[v] = v < inflated ? 0 : 1;
  CHECK_FALSE(is_typical(off, m, 0.5));

  // empty community with positive prior
  std::vector<int> empty_comm(m.n, 0);
  CHECK_FALSE(is_typical(empty_comm, m, 0.5));

  CHECK_THROWS_AS(is_typical(exact, m, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(is_typical(exact, m, 1.0), std::invalid_argument);
}

TEST_CASE("sample_hsbm trivial regimes") {
  ModelParams zero = symmetric2(40, 3, 0.0, 0.0);
  const auto labels = sample_labels(zero, 5);
  for (const SampleStrategy s :
       {SampleStrategy::kExact, SampleStrategy::kStratified}) {
    const Hypergraph g = sample_hsbm(zero, labels, 5, s);
    CHECK(g.edge_count() == 0);
  }

  // probability within a hair of 1: complete 3-uniform hypergraph on 8 nodes
  ModelParams full = symmetric2(8, 3, 0.0, 0.0);
  const double cap = 64.0 / std::log(8.0);
  for (double& q : full.rates) q = cap * (1.0 - 1e-12);
  const auto z8 = sample_labels(full, 5);
  for (const SampleStrategy s :
       {SampleStrategy::kExact, SampleStrategy::kStratified}) {
    const Hypergraph g = sample_hsbm(full, z8, 5, s);
    CHECK(g.edge_count() == 56);  // C(8,3)
    CHECK(g.is_canonical());
  }
}

TEST_CASE("sampled hypergraphs are canonical under both strategies") {
  SplitMix64 seeds(404);
  for (int rep = 0; rep < 10; ++rep) {
    const ModelParams m = symmetric2(30 + 5 * rep, 2 + rep % 3, 8.0, 3.0);
    const auto labels = sample_labels(m, seeds.next());
    const std::uint64_t s = seeds.next();
    const Hypergraph ge = sample_hsbm(m, labels, s, SampleStrategy::kExact);
    const Hypergraph gs = sample_hsbm(m, labels, s, SampleStrategy::kStratified);
    CHECK(ge.is_canonical());
    CHECK(gs.is_canonical());
  }
}

TEST_CASE("per-class frequencies match the model (exact strategy)") {
  const ModelParams m = symmetric2(100, 3, 30.0, 6.0);
  const auto labels = sample_labels(m, 17);
  const auto sizes = class_sizes(labels, m.k, m.d);
  const AssignmentTable table(m.k, m.d);
  std::vector<std::int64_t> totals(table.size(), 0);
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) {
    const Hypergraph g = sample_hsbm(m, labels, 1000 + s, SampleStrategy::kExact);
    const auto counts = class_counts(g, labels, m.k);
    for (int t = 0; t < table.size(); ++t) totals[t] += counts[t];
  }
  for (int t = 0; t < table.size(); ++t) {
    const double prob = m.edge_prob(m.rates[t]);
    const double mean = sizes[t] * prob;
    const double sigma = std::sqrt(sizes[t] * prob * (1.0 - prob));
    const double avg = static_cast<double>(totals[t]) / seeds;
    CHECK(std::abs(avg - mean) <= 4.0 * sigma / std::sqrt(double(seeds)) + 1e-9);
  }
}

TEST_CASE("exact and stratified strategies agree in distribution (means)") {
  const ModelParams m = symmetric2(40, 3, 20.0, 8.0);
  const auto labels = sample_labels(m, 3);
  const AssignmentTable table(m.k, m.d);
  const auto sizes = class_sizes(labels, m.k, m.d);
  std::vector<double> sum_e(table.size(), 0), sum_s(table.size(), 0);
  const int seeds = 400;
  for (int s = 0; s < seeds; ++s) {
    const auto ce =
        class_counts(sample_hsbm(m, labels, 7000 + s, SampleStrategy::kExact),
                     labels, m.k);
    const auto cs = class_counts(
        sample_hsbm(m, labels, 90000 + s, SampleStrategy::kStratified), labels,
        m.k);
    for (int t = 0; t < table.size(); ++t) {
      sum_e[t] += ce[t];
      sum_s[t] += cs[t];
    }
  }
  for (int t = 0; t < table.size(); ++t) {
    const double prob = m.edge_prob(m.rates[t]);
    const double sigma_mean =
        std::sqrt(sizes[t] * prob * (1.0 - prob) / seeds);
    CHECK(std::abs(sum_e[t] / seeds - sum_s[t] / seeds) <= 8.0 * sigma_mean + 1e-9);
  }
}

TEST_CASE("generate-then-split matches direct sub-model generation") {
  // Splitting a full sample at rate gamma/log n is distributionally the
  // direct sample with rates Q * gamma / log n.
  const ModelParams m = symmetric2(100, 3, 25.0, 10.0);
  const auto labels = sample_labels(m, 11);
  const double gamma_n = std::sqrt(std::log(100.0));
  const ModelParams sub = m.scaled(gamma_n / std::log(100.0));
  const AssignmentTable table(m.k, m.d);
  const auto sizes = class_sizes(labels, m.k, m.d);

  std::vector<double> sum_split(table.size(), 0), sum_direct(table.size(), 0);
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const Hypergraph g = sample_hsbm(m, labels, 500 + s, SampleStrategy::kExact);
    const SplitPair pair = split_hypergraph(g, gamma_n, 500 + s);
    const auto c1 = class_counts(pair.g1, labels, m.k);
    const auto cd = class_counts(
        sample_hsbm(sub, labels, 123450 + s, SampleStrategy::kExact), labels, m.k);
    for (int t = 0; t < table.size(); ++t) {
      sum_split[t] += c1[t];
      sum_direct[t] += cd[t];
    }
  }
  for (int t = 0; t < table.size(); ++t) {
    const double prob = sub.edge_prob(sub.rates[t]);
    const double sigma_mean = std::sqrt(sizes[t] * prob * (1.0 - prob) / seeds);
    CHECK(std::abs(sum_split[t] / seeds - sum_direct[t] / seeds) <=
          8.0 * sigma_mean + 1e-9);
  }
}

TEST_CASE("split partitions the edge set") {
  const ModelParams m = symmetric2(80, 2, 9.0, 2.0);
  const auto labels = sample_labels(m, 21);
  const Hypergraph g = sample_hsbm(m, labels, 21, SampleStrategy::kExact);
  const SplitPair pair = split_hypergraph(g, 1.5, 21);
  CHECK(pair.g1.edge_count() + pair.g2.edge_count() == g.edge_count());
  for (std::size_t e = 0; e < pair.g1.edge_count(); ++e) {
    CHECK(g.contains(pair.g1.edge(e)));
    CHECK_FALSE(pair.g2.contains(pair.g1.edge(e)));
  }
  for (std::size_t e = 0; e < pair.g2.edge_count(); ++e) CHECK(g.contains(pair.g2.edge(e)));

  // deterministic given the seed
  const SplitPair again = split_hypergraph(g, 1.5, 21);
  CHECK(again.g1.flat == pair.g1.flat);
  CHECK(again.g2.flat == pair.g2.flat);
}

TEST_CASE("split sizes are binomially consistent") {
  Hypergraph g;
  g.n = 100000;
  g.d = 2;
  // synthetic edge list: (2i, 2i+1)
  for (std::int32_t i = 0; i < 100000 / 2; ++i) {
    const std::int32_t e[2] = {2 * i, 2 * i + 1};
    g.append_edge(e);
  }
  const double rate = 0.3;
  const double gamma_n = rate * std::log(static_cast<double>(g.n));
  const SplitPair pair = split_hypergraph(g, gamma_n, 1234);
  const double mean = rate * static_cast<double>(g.edge_count());
  const double sigma = std::sqrt(g.edge_count() * rate * (1.0 - rate));
  CHECK(std::abs(static_cast<double>(pair.g1.edge_count()) - mean) <= 4.0 * sigma);

  // near-zero rate sends (essentially) nothing to g1
  const SplitPair tiny = split_hypergraph(g, 1e-9 * std::log(100000.0), 77);
  CHECK(tiny.g1.edge_count() == 0);

  CHECK_THROWS_AS(split_hypergraph(g, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(split_hypergraph(g, std::log(100000.0), 1), std::invalid_argument);
}

TEST_CASE("binomial sampler hits both paths with correct moments") {
  SplitMix64 rng(5150);
  // small-n path
  {
    const int reps = 4000;
    double sum = 0;
    for (int i = 0; i < reps; ++i) sum += sample_binomial(100, 0.25, rng);
    const double mean = sum / reps;
    const double sigma_mean = std::sqrt(100 * 0.25 * 0.75 / reps);
    CHECK(std::abs(mean - 25.0) <= 4.0 * sigma_mean);
  }
  // geometric-skip path
  {
    const int reps = 2000;
    double sum = 0;
    for (int i = 0; i < reps; ++i)
      sum += sample_binomial(static_cast<unsigned __int128>(1000000), 1e-5, rng);
    const double mean = sum / reps;
    const double sigma_mean = std::sqrt(10.0 / reps);
    CHECK(std::abs(mean - 10.0) <= 4.0 * sigma_mean);
  }
  CHECK(sample_binomial(1000, 0.0, rng) == 0);
  CHECK(sample_binomial(0, 0.5, rng) == 0);
  CHECK(sample_binomial(17, 1.0, rng) == 17);
}

TEST_CASE("binomial_u128 counts and overflow guard") {
  CHECK(binomial_u128(8, 3) == 56);
  CHECK(binomial_u128(5, 0) == 1);
  CHECK(binomial_u128(4, 5) == 0);
  CHECK(static_cast<double>(binomial_u128(300, 4)) ==
        doctest::Approx(330791175.0));
  CHECK_THROWS_AS(binomial_u128(100000000, 8), std::overflow_error);
}

TEST_CASE("hypergraph file format round-trips") {
  const ModelParams m = symmetric2(30, 3, 12.0, 5.0);
  const auto labels = sample_labels(m, 8);
  const Hypergraph g = sample_hsbm(m, labels, 8, SampleStrategy::kExact);
  const std::string dir = std::filesystem::temp_directory_path().string();
  const std::string gpath = dir + "/hsbm_test_graph.txt";
  const std::string lpath = dir + "/hsbm_test_labels.txt";
  write_hypergraph(gpath, g);
  write_labels(lpath, labels);
  const Hypergraph back = read_hypergraph(gpath);
  CHECK(back.n == g.n);
  CHECK(back.d == g.d);
  CHECK(back.flat == g.flat);
  CHECK(read_labels(lpath) == labels);
  std::filesystem::remove(gpath);
  std::filesystem::remove(lpath);

  CHECK_THROWS(read_hypergraph(dir + "/does_not_exist_hsbm.txt"));
}
