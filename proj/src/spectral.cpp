#include "hsbm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hsbm/kernels.hpp"

namespace hsbm {

std::vector<int> spectral_cluster(const TrimmedSpectral& spec, int k, double r,
                                  SplitMix64& rng) {
  if (k < 1) throw std::invalid_argument("spectral_cluster: k must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("spectral_cluster: r must be > 0");
  if (spec.gamma.empty())
    throw std::invalid_argument("spectral_cluster: empty retained set");
  if (spec.rank_k.size() == 0)
    throw std::invalid_argument("spectral_cluster: rank-k approximation missing");

  const std::int64_t n = spec.rank_k.cols();  // one column per node
  std::vector<int> labels(n, -1);

  // Reference nodes: ceil(log n) draws from gamma, with replacement.
  const int psi_count =
      std::max<int>(1, static_cast<int>(std::ceil(std::log(static_cast<double>(n)))));
  std::vector<std::int32_t> psi(psi_count);
  for (int i = 0; i < psi_count; ++i)
    psi[i] = spec.gamma[rng.below(spec.gamma.size())];
  std::sort(psi.begin(), psi.end());
  psi.erase(std::unique(psi.begin(), psi.end()), psi.end());

  // Balls around each distinct reference node.
  const Eigen::MatrixXd dist =
      kernels::pairwise_sqdist(spec.rank_k, spec.gamma, psi);
  std::vector<std::vector<std::int32_t>> balls(psi.size());
  for (std::size_t b = 0; b < psi.size(); ++b)
    for (std::size_t a = 0; a < spec.gamma.size(); ++a)
      if (dist(a, b) <= r) balls[b].push_back(spec.gamma[a]);

  // Greedy extraction: largest residual ball first, smallest node id on ties
  // (psi is sorted, strict improvement only).
  std::vector<char> assigned(n, 0);
  std::vector<std::int32_t> centers(k);
  for (int j = 0; j < k; ++j) {
    std::size_t best = 0;
    std::int64_t best_count = -1;
    for (std::size_t b = 0; b < psi.size(); ++b) {
      std::int64_t count = 0;
      for (const std::int32_t u : balls[b])
        if (!assigned[u]) ++count;
      if (count > best_count) {
        best_count = count;
        best = b;
      }
    }
    centers[j] = psi[best];
    for (const std::int32_t u : balls[best]) {
      if (!assigned[u]) {
        assigned[u] = 1;
        labels[u] = j;
      }
    }
  }

  // Remaining retained nodes go to the nearest extracted center.
  std::vector<std::int32_t> leftover;
  for (const std::int32_t v : spec.gamma)
    if (!assigned[v]) leftover.push_back(v);
  if (!leftover.empty()) {
    const Eigen::MatrixXd to_centers =
        kernels::pairwise_sqdist(spec.rank_k, leftover, centers);
    for (std::size_t a = 0; a < leftover.size(); ++a) {
      int best_j = 0;
      for (int j = 1; j < k; ++j)
        if (to_centers(a, j) < to_centers(a, best_j)) best_j = j;
      labels[leftover[a]] = best_j;
    }
  }

  // Trimmed nodes are labeled uniformly at random, in ascending id order.
  for (std::int64_t v = 0; v < n; ++v)
    if (labels[v] < 0) labels[v] = static_cast<int>(rng.below(k));
  return labels;
}

}  // namespace hsbm
