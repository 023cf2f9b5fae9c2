#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "hsbm/model.hpp"

namespace hsbm::kernels {

// Squared Euclidean distances between columns of `m`:
// out(a, b) = || m.col(rows[a]) - m.col(targets[b]) ||^2.
// Every entry is an independent fixed-order reduction, so the parallel
// version is bitwise identical to the serial reference.
Eigen::MatrixXd pairwise_sqdist(const Eigen::MatrixXd& m,
                                const std::vector<std::int32_t>& sources,
                                const std::vector<std::int32_t>& targets);

// Expected pair co-occurrence matrix under edge rates Q_T * gamma_n / n^(d-1)
// for fixed ground-truth labels; zero diagonal.
Eigen::MatrixXd expected_laplacian(const ModelParams& params,
                                   const std::vector<int>& labels,
                                   double gamma_n);

namespace serial {

// Reference implementations: same arithmetic, no OpenMP. Kept for tests and
// the benchmark.
Eigen::MatrixXd pairwise_sqdist(const Eigen::MatrixXd& m,
                                const std::vector<std::int32_t>& sources,
                                const std::vector<std::int32_t>& targets);
Eigen::MatrixXd expected_laplacian(const ModelParams& params,
                                   const std::vector<int>& labels,
                                   double gamma_n);

}  // namespace serial

}  // namespace hsbm::kernels
