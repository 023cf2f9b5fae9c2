#pragma once

#include <cstdint>
#include <vector>

#include "hsbm/laplacian.hpp"
#include "hsbm/rng.hpp"

namespace hsbm {

// Reference-node ball clustering on the columns of the rank-k matrix:
// draws ceil(log n) reference nodes from gamma with replacement, builds
// balls of squared radius r around them, greedily extracts k communities by
// largest residual ball, assigns leftover retained nodes to the nearest
// extracted center, and labels trimmed nodes uniformly at random. Returns
// 0-based labels. Ties break to the smallest node id / community index.
std::vector<int> spectral_cluster(const TrimmedSpectral& spec, int k, double r,
                                  SplitMix64& rng);

}  // namespace hsbm
