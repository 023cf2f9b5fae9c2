#include "hsbm/laplacian.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hsbm {

LaplacianMatrix build_laplacian(const Hypergraph& g) {
  const Eigen::Index n = static_cast<Eigen::Index>(g.n);
  LaplacianMatrix l;
  l.pair_counts = Eigen::MatrixXd::Zero(n, n);
  l.degrees = Eigen::VectorXd::Zero(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto t = g.edge(e);
    for (int a = 0; a < g.d; ++a) {
      l.degrees[t[a]] += 1.0;
      for (int b = a + 1; b < g.d; ++b) {
        l.pair_counts(t[a], t[b]) += 1.0;
        l.pair_counts(t[b], t[a]) += 1.0;
      }
    }
  }
  return l;
}

TrimmedSpectral trim(const LaplacianMatrix& l, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("trim: tau must be > 0");
  TrimmedSpectral out;
  out.tau = tau;
  const Eigen::Index n = l.degrees.size();
  for (Eigen::Index v = 0; v < n; ++v)
    if (l.degrees[v] <= tau) out.gamma.push_back(static_cast<std::int32_t>(v));
  if (out.gamma.empty())
    throw std::runtime_error("trim: every node exceeds the degree threshold");
  out.trimmed = l.pair_counts;
  std::vector<char> keep(n, 0);
  for (const std::int32_t v : out.gamma) keep[v] = 1;
  for (Eigen::Index v = 0; v < n; ++v) {
    if (!keep[v]) {
      out.trimmed.row(v).setZero();
      out.trimmed.col(v).setZero();
    }
  }
  return out;
}

Eigen::MatrixXd rank_k_approx(const Eigen::MatrixXd& a, int k) {
  const Eigen::Index n = a.rows();
  if (k < 1) throw std::invalid_argument("rank_k_approx: k must be >= 1");
  if (k >= std::min(a.rows(), a.cols())) return a;

  const bool symmetric =
      a.rows() == a.cols() &&
      (a - a.transpose()).cwiseAbs().maxCoeff() <=
          1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff());
  if (symmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    if (eig.info() != Eigen::Success)
      throw std::runtime_error("rank_k_approx: eigendecomposition failed");
    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& vals = eig.eigenvalues();
    std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
      const double ax = std::abs(vals[x]), ay = std::abs(vals[y]);
      if (ax != ay) return ax > ay;
      if (vals[x] != vals[y]) return vals[x] > vals[y];
      return x < y;
    });
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < k; ++r) {
      const Eigen::Index idx = order[r];
      out.noalias() +=
          vals[idx] * eig.eigenvectors().col(idx) * eig.eigenvectors().col(idx).transpose();
    }
    return out;
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("rank_k_approx: SVD did not converge");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (int r = 0; r < k; ++r)
    out.noalias() += svd.singularValues()[r] * svd.matrixU().col(r) *
                     svd.matrixV().col(r).transpose();
  return out;
}

}  // namespace hsbm
