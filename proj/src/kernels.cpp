#include "hsbm/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace hsbm::kernels {

namespace detail {

inline double col_sqdist(const Eigen::MatrixXd& m, std::int32_t a,
                         std::int32_t b) {
  double sum = 0.0;
  const double* pa = m.col(a).data();
  const double* pb = m.col(b).data();
  const Eigen::Index rows = m.rows();
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double diff = pa[r] - pb[r];
    sum += diff * diff;
  }
  return sum;
}

// One entry of the expected Laplacian: sum over assignments w of the d-2
// companion nodes of (number of such subsets) * rate(w + z_u + z_v) * g / n^(d-1).
inline double expected_entry(const std::vector<std::int64_t>& class_counts,
                             int zu, int zv, const ModelParams& params,
                             const AssignmentTable& pair_companions,
                             const std::vector<int>& oplus2_rank,
                             double per_edge) {
  const int k = params.k;
  double sum = 0.0;
  for (int w = 0; w < pair_companions.size(); ++w) {
    const AssignmentVec& vec = pair_companions.at(w);
    double count = 1.0;
    for (int s = 0; s < k && count > 0.0; ++s) {
      std::int64_t avail = class_counts[s] - (zu == s) - (zv == s);
      for (int j = 0; j < vec[s]; ++j, --avail)
        count *= static_cast<double>(std::max<std::int64_t>(avail, 0)) /
                 static_cast<double>(j + 1);
    }
    if (count > 0.0)
      sum += count *
             params.rates[oplus2_rank[static_cast<std::size_t>(w) * k * k +
                                      static_cast<std::size_t>(zu) * k + zv]] *
             per_edge;
  }
  return sum;
}

struct ExpectedSetup {
  AssignmentTable pair_companions;
  std::vector<int> oplus2_rank;  // [w * k * k + zu * k + zv] -> edge rank
  std::vector<std::int64_t> class_counts;
  double per_edge;

  ExpectedSetup(const ModelParams& params, const std::vector<int>& labels,
                double gamma_n)
      : pair_companions(params.k, params.d - 2) {
    validate(params);
    if (static_cast<std::int64_t>(labels.size()) != params.n)
      throw std::invalid_argument("expected_laplacian: label length != n");
    const AssignmentTable edge_table(params.k, params.d);
    const int k = params.k;
    oplus2_rank.resize(static_cast<std::size_t>(pair_companions.size()) * k * k);
    for (int w = 0; w < pair_companions.size(); ++w)
      for (int zu = 0; zu < k; ++zu)
        for (int zv = 0; zv < k; ++zv)
          oplus2_rank[static_cast<std::size_t>(w) * k * k +
                      static_cast<std::size_t>(zu) * k + zv] =
              edge_table.rank(oplus(oplus(pair_companions.at(w), zu), zv));
    class_counts.assign(k, 0);
    for (const int z : labels) ++class_counts[z];
    per_edge = gamma_n / std::pow(static_cast<double>(params.n), params.d - 1);
  }
};

}  // namespace detail

namespace serial {

Eigen::MatrixXd pairwise_sqdist(const Eigen::MatrixXd& m,
                                const std::vector<std::int32_t>& sources,
                                const std::vector<std::int32_t>& targets) {
  Eigen::MatrixXd out(sources.size(), targets.size());
  for (std::size_t a = 0; a < sources.size(); ++a)
    for (std::size_t b = 0; b < targets.size(); ++b)
      out(a, b) = detail::col_sqdist(m, sources[a], targets[b]);
  return out;
}

Eigen::MatrixXd expected_laplacian(const ModelParams& params,
                                   const std::vector<int>& labels,
                                   double gamma_n) {
  const detail::ExpectedSetup setup(params, labels, gamma_n);
  const Eigen::Index n = static_cast<Eigen::Index>(params.n);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v)
      if (u != v)
        out(u, v) = detail::expected_entry(setup.class_counts, labels[u],
                                           labels[v], params,
                                           setup.pair_companions,
                                           setup.oplus2_rank, setup.per_edge);
  return out;
}

}  // namespace serial

Eigen::MatrixXd pairwise_sqdist(const Eigen::MatrixXd& m,
                                const std::vector<std::int32_t>& sources,
                                const std::vector<std::int32_t>& targets) {
  Eigen::MatrixXd out(sources.size(), targets.size());
  const std::int64_t na = static_cast<std::int64_t>(sources.size());
  const std::int64_t nb = static_cast<std::int64_t>(targets.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < na; ++a)
    for (std::int64_t b = 0; b < nb; ++b)
      out(a, b) = detail::col_sqdist(m, sources[a], targets[b]);
  return out;
}

Eigen::MatrixXd expected_laplacian(const ModelParams& params,
                                   const std::vector<int>& labels,
                                   double gamma_n) {
  const detail::ExpectedSetup setup(params, labels, gamma_n);
  const std::int64_t n = params.n;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
#pragma omp parallel for schedule(static)
  for (std::int64_t u = 0; u < n; ++u)
    for (std::int64_t v = 0; v < n; ++v)
      if (u != v)
        out(u, v) = detail::expected_entry(setup.class_counts, labels[u],
                                           labels[v], params,
                                           setup.pair_companions,
                                           setup.oplus2_rank, setup.per_edge);
  return out;
}

}  // namespace hsbm::kernels
