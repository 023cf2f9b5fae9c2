#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "hsbm/hypergraph.hpp"

namespace hsbm {

// Pair co-occurrence matrix of a hypergraph: entry (u,v), u != v, counts the
// hyperedges containing both u and v; the diagonal is zero (HH^T minus the
// degree diagonal). Degrees are kept alongside for trimming.
struct LaplacianMatrix {
  Eigen::MatrixXd pair_counts;
  Eigen::VectorXd degrees;
};

LaplacianMatrix build_laplacian(const Hypergraph& g);

// Result of degree trimming plus (optionally) the rank-k step.
struct TrimmedSpectral {
  std::vector<std::int32_t> gamma;  // retained nodes, ascending
  Eigen::MatrixXd trimmed;          // rows/cols outside gamma zeroed
  Eigen::MatrixXd rank_k;           // empty until rank_k_approx ran
  double tau = 0.0;
};

// Keeps nodes with degree <= tau and zeroes the other rows and columns.
// Throws if no node survives.
TrimmedSpectral trim(const LaplacianMatrix& l, double tau);

// Best rank-<=k approximation in Frobenius norm via truncated spectral /
// singular value decomposition. Symmetric inputs go through a self-adjoint
// eigendecomposition truncated by |eigenvalue|, which keeps the output
// exactly symmetric; general inputs use a truncated SVD.
Eigen::MatrixXd rank_k_approx(const Eigen::MatrixXd& a, int k);

}  // namespace hsbm
