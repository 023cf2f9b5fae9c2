#pragma once

#include <cstdint>
#include <vector>

#include "hsbm/hypergraph.hpp"
#include "hsbm/model.hpp"
#include "hsbm/rng.hpp"

namespace hsbm {

// i.i.d. community labels from the prior; deterministic given the seed.
std::vector<int> sample_labels(const ModelParams& params, std::uint64_t seed);

// Community sizes within the concentration band
// (1 +- n^(-1/2+delta/2)) * p_j * n for every j.
bool is_typical(const std::vector<int>& labels, const ModelParams& params,
                double delta);

enum class SampleStrategy { kExact, kStratified };

// kExact streams all C(n,d) candidate tuples; kStratified is only worth it
// beyond that budget.
SampleStrategy choose_strategy(std::int64_t n, int d,
                               double exact_budget = 5e7);

// Random hypergraph: every candidate d-subset appears independently with
// probability rate(T) * log(n) / n^(d-1) where T is the subset's community
// assignment under `labels`. kExact enumerates all candidates in
// lexicographic order; kStratified draws a binomial count per assignment
// class followed by a uniform subset of the class without replacement. The
// two strategies sample the same distribution.
Hypergraph sample_hsbm(const ModelParams& params, const std::vector<int>& labels,
                       std::uint64_t seed, SampleStrategy strategy);

struct SplitPair {
  Hypergraph g1;
  Hypergraph g2;
  double gamma_n = 0.0;
};

// Routes each present edge to g1 with probability gamma_n / log(n),
// otherwise g2, using a stream independent of edge generation. Only the
// realized edges are split; the absent part of the candidate set never
// materializes.
SplitPair split_hypergraph(const Hypergraph& g, double gamma_n,
                           std::uint64_t seed);

// Exact-distribution Binomial(n, p) draw: Bernoulli summation for small n,
// geometric skipping otherwise. Work is O(n*p) in expectation.
std::uint64_t sample_binomial(unsigned __int128 n, double p, SplitMix64& rng);

// C(n, r) as an overflow-checked 128-bit integer; throws when the count
// exceeds the representable range.
unsigned __int128 binomial_u128(std::int64_t n, int r);

}  // namespace hsbm
