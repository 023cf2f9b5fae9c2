#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "hsbm/eval.hpp"
#include "hsbm/kernels.hpp"
#include "hsbm/spectral.hpp"

using namespace hsbm;

namespace {

// Builds a TrimmedSpectral whose rank-k columns are the given points plus
// per-node jitter; correctness of clustering is decidable by construction.
TrimmedSpectral synthetic_columns(const std::vector<Eigen::VectorXd>& centers,
                                  const std::vector<int>& membership,
                                  double jitter, SplitMix64& rng) {
  const std::int64_t n = static_cast<std::int64_t>(membership.size());
  const Eigen::Index dim = centers[0].size();
  TrimmedSpectral spec;
  spec.tau = 1.0;
  spec.rank_k = Eigen::MatrixXd::Zero(dim, n);
  for (std::int64_t v = 0; v < n; ++v) {
    spec.gamma.push_back(static_cast<std::int32_t>(v));
    Eigen::VectorXd col = centers[membership[v]];
    for (Eigen::Index r = 0; r < dim; ++r)
      col[r] += jitter * (2.0 * rng.next_double() - 1.0);
    spec.rank_k.col(v) = col;
  }
  spec.trimmed = spec.rank_k;
  return spec;
}

}  // namespace

TEST_CASE("single community labels everything identically") {
  SplitMix64 rng(1);
  std::vector<Eigen::VectorXd> centers{Eigen::VectorXd::Zero(4)};
  std::vector<int> membership(20, 0);
  const TrimmedSpectral spec = synthetic_columns(centers, membership, 0.01, rng);
  SplitMix64 cluster_rng(2);
  const auto labels = spectral_cluster(spec, 1, 0.5, cluster_rng);
  for (const int z : labels) CHECK(z == 0);
}

TEST_CASE("well-separated clouds are recovered exactly") {
  // intra-cloud squared spread < r < inter-cloud squared gap
  SplitMix64 rng(77);
  std::vector<Eigen::VectorXd> centers(2, Eigen::VectorXd::Zero(6));
  centers[1][0] = 4.0;  // gap^2 = 16
  std::vector<int> membership(60);
  for (std::size_t v = 0; v < membership.size(); ++v)
    membership[v] = static_cast<int>(rng.below(2));
  const TrimmedSpectral spec = synthetic_columns(centers, membership, 0.05, rng);
  SplitMix64 cluster_rng(3);
  const auto labels = spectral_cluster(spec, 2, 1.0, cluster_rng);
  const RecoveryReport report = misclassification(labels, membership);
  CHECK(report.exact);
}

TEST_CASE("three clouds, k=3, exact up to permutation") {
  SplitMix64 rng(404);
  std::vector<Eigen::VectorXd> centers(3, Eigen::VectorXd::Zero(5));
  centers[1][1] = 3.0;
  centers[2][2] = 3.0;
  std::vector<int> membership(90);
  for (std::size_t v = 0; v < membership.size(); ++v)
    membership[v] = static_cast<int>(rng.below(3));
  const TrimmedSpectral spec = synthetic_columns(centers, membership, 0.08, rng);
  SplitMix64 cluster_rng(4);
  const auto labels = spectral_cluster(spec, 3, 1.5, cluster_rng);
  CHECK(misclassification(labels, membership).exact);
}

TEST_CASE("clustering is deterministic given the stream") {
  SplitMix64 rng(5);
  std::vector<Eigen::VectorXd> centers(2, Eigen::VectorXd::Zero(3));
  centers[1][0] = 2.0;
  std::vector<int> membership(40);
  for (std::size_t v = 0; v < membership.size(); ++v)
    membership[v] = static_cast<int>(rng.below(2));
  const TrimmedSpectral spec = synthetic_columns(centers, membership, 0.3, rng);
  SplitMix64 r1(42), r2(42);
  CHECK(spectral_cluster(spec, 2, 0.9, r1) == spectral_cluster(spec, 2, 0.9, r2));
}

TEST_CASE("trimmed nodes get seeded random labels") {
  // gamma covers only the first 30 of 40 nodes; the rest are random in [k)
  SplitMix64 rng(6);
  std::vector<Eigen::VectorXd> centers(2, Eigen::VectorXd::Zero(3));
  centers[1][0] = 5.0;
  std::vector<int> membership(40);
  for (std::size_t v = 0; v < membership.size(); ++v)
    membership[v] = static_cast<int>(rng.below(2));
  TrimmedSpectral spec = synthetic_columns(centers, membership, 0.02, rng);
  spec.gamma.resize(30);
  for (int v = 30; v < 40; ++v) spec.rank_k.col(v).setZero();

  SplitMix64 r1(43), r2(43);
  const auto a = spectral_cluster(spec, 2, 1.0, r1);
  const auto b = spectral_cluster(spec, 2, 1.0, r2);
  CHECK(a == b);
  for (int v = 0; v < 40; ++v) {
    CHECK(a[v] >= 0);
    CHECK(a[v] < 2);
  }
  // retained nodes still recovered exactly
  std::vector<int> z_head(membership.begin(), membership.begin() + 30);
  std::vector<int> a_head(a.begin(), a.begin() + 30);
  CHECK(misclassification(a_head, z_head).exact);
}

TEST_CASE("empty later communities are permitted") {
  // one tight cloud, k=2: the first ball eats everything
  SplitMix64 rng(7);
  std::vector<Eigen::VectorXd> centers{Eigen::VectorXd::Zero(3)};
  std::vector<int> membership(25, 0);
  const TrimmedSpectral spec = synthetic_columns(centers, membership, 0.01, rng);
  SplitMix64 cluster_rng(8);
  const auto labels = spectral_cluster(spec, 2, 2.0, cluster_rng);
  for (const int z : labels) CHECK(z == 0);
}

TEST_CASE("argument validation") {
  SplitMix64 rng(9);
  std::vector<Eigen::VectorXd> centers{Eigen::VectorXd::Zero(2)};
  std::vector<int> membership(5, 0);
  TrimmedSpectral spec = synthetic_columns(centers, membership, 0.1, rng);
  SplitMix64 cluster_rng(10);
  CHECK_THROWS_AS(spectral_cluster(spec, 0, 1.0, cluster_rng), std::invalid_argument);
  CHECK_THROWS_AS(spectral_cluster(spec, 2, 0.0, cluster_rng), std::invalid_argument);
  TrimmedSpectral no_rank = spec;
  no_rank.rank_k = Eigen::MatrixXd();
  CHECK_THROWS_AS(spectral_cluster(no_rank, 2, 1.0, cluster_rng), std::invalid_argument);
  TrimmedSpectral no_gamma = spec;
  no_gamma.gamma.clear();
  CHECK_THROWS_AS(spectral_cluster(no_gamma, 2, 1.0, cluster_rng), std::invalid_argument);
}

TEST_CASE("pairwise_sqdist parallel matches serial bitwise") {
  SplitMix64 rng(1234);
  Eigen::MatrixXd m(50, 80);
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      m(r, c) = rng.next_double() * 10 - 5;
  std::vector<std::int32_t> sources, targets;
  for (int i = 0; i < 80; i += 2) sources.push_back(i);
  for (int i = 0; i < 80; i += 7) targets.push_back(i);
  const Eigen::MatrixXd a = kernels::pairwise_sqdist(m, sources, targets);
  const Eigen::MatrixXd b = kernels::serial::pairwise_sqdist(m, sources, targets);
  CHECK(a == b);
  // spot-check one entry against Eigen
  CHECK(a(3, 2) == doctest::Approx((m.col(sources[3]) - m.col(targets[2]))
                                       .squaredNorm())
                       .epsilon(1e-15));
}
