#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hsbm/eval.hpp"
#include "hsbm/rng.hpp"

using namespace hsbm;

namespace {

std::vector<int> random_labels(std::int64_t n, int k, SplitMix64& rng) {
  std::vector<int> z(n);
  for (auto& x : z) x = static_cast<int>(rng.below(k));
  return z;
}

// Exhaustive minimum over all k! permutations, straight from the definition.
double brute_force(const std::vector<int>& z_hat, const std::vector<int>& z, int k) {
  std::vector<int> pi(k);
  std::iota(pi.begin(), pi.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t wrong = 0;
    for (std::size_t v = 0; v < z.size(); ++v) wrong += (z_hat[v] != pi[z[v]]);
    best = std::min(best, wrong);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return static_cast<double>(best) / static_cast<double>(z.size());
}

}  // namespace

TEST_CASE("exact agreement and pure relabelings score zero") {
  const std::vector<int> z{0, 0, 1, 1};
  const RecoveryReport same = misclassification(z, z);
  CHECK(same.misclassification == 0.0);
  CHECK(same.exact);
  CHECK(same.best_permutation == std::vector<int>{0, 1});

  const std::vector<int> swapped{1, 1, 0, 0};
  const RecoveryReport swap = misclassification(swapped, z);
  CHECK(swap.misclassification == 0.0);
  CHECK(swap.exact);
  CHECK(swap.best_permutation == std::vector<int>{1, 0});
}

TEST_CASE("single disagreement on four nodes scores 1/4") {
  const std::vector<int> z{0, 0, 1, 1};
  const std::vector<int> z_hat{0, 1, 1, 1};
  const RecoveryReport report = misclassification(z_hat, z);
  CHECK(report.misclassification == doctest::Approx(0.25));
  CHECK_FALSE(report.exact);
  CHECK(report.misclassification == doctest::Approx(brute_force(z_hat, z, 2)));
}

TEST_CASE("report value matches brute force for k in 3..8") {
  SplitMix64 rng(1618);
  for (int rep = 0; rep < 500; ++rep) {
    const int k = 3 + static_cast<int>(rng.below(6));
    const int n = 12 + static_cast<int>(rng.below(30));
    const auto z = random_labels(n, k, rng);
    const auto z_hat = random_labels(n, k, rng);
    const RecoveryReport report = misclassification(z_hat, z);
    CHECK(report.misclassification == doctest::Approx(brute_force(z_hat, z, k)));
    // reported permutation achieves the reported value
    std::int64_t wrong = 0;
    for (int v = 0; v < n; ++v) wrong += (z_hat[v] != report.best_permutation[z[v]]);
    CHECK(static_cast<double>(wrong) / n ==
          doctest::Approx(report.misclassification));
  }
}

TEST_CASE("assignment path agrees with brute force at k=9") {
  SplitMix64 rng(2718);
  for (int rep = 0; rep < 3; ++rep) {
    const auto z = random_labels(60, 9, rng);
    const auto z_hat = random_labels(60, 9, rng);
    const RecoveryReport report = misclassification(z_hat, z);  // Hungarian path
    CHECK(report.misclassification == doctest::Approx(brute_force(z_hat, z, 9)));
  }
}

TEST_CASE("value is invariant under global relabeling of either side") {
  SplitMix64 rng(345);
  const auto z = random_labels(40, 4, rng);
  const auto z_hat = random_labels(40, 4, rng);
  const double base = misclassification(z_hat, z).misclassification;

  const std::vector<int> relabel{2, 0, 3, 1};
  std::vector<int> z2(z.size()), zh2(z_hat.size());
  for (std::size_t v = 0; v < z.size(); ++v) {
    z2[v] = relabel[z[v]];
    zh2[v] = relabel[z_hat[v]];
  }
  CHECK(misclassification(z_hat, z2).misclassification == doctest::Approx(base));
  CHECK(misclassification(zh2, z).misclassification == doctest::Approx(base));
}

TEST_CASE("constant predictor saturates the count bound") {
  SplitMix64 rng(456);
  const auto z = random_labels(50, 3, rng);
  std::vector<std::int64_t> counts(3, 0);
  for (const int b : z) ++counts[b];
  const std::vector<int> constant(50, 1);
  const RecoveryReport report = misclassification(constant, z);
  const double bound =
      1.0 - static_cast<double>(*std::max_element(counts.begin(), counts.end())) / 50.0;
  CHECK(report.misclassification >= 0.0);
  CHECK(report.misclassification == doctest::Approx(bound));
}

TEST_CASE("confusion matrix counts pairs") {
  const std::vector<int> z{0, 0, 1, 1, 2};
  const std::vector<int> z_hat{0, 1, 1, 1, 0};
  const RecoveryReport report = misclassification(z_hat, z);
  CHECK(report.confusion[0][0] == 1);
  CHECK(report.confusion[1][0] == 1);
  CHECK(report.confusion[1][1] == 2);
  CHECK(report.confusion[0][2] == 1);
  std::int64_t total = 0;
  for (const auto& row : report.confusion)
    total = std::accumulate(row.begin(), row.end(), total);
  CHECK(total == 5);
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(misclassification({0, 1}, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("max_assignment solves small known instances") {
  // scores favor the anti-diagonal
  const std::vector<std::vector<std::int64_t>> score{
      {1, 2, 9}, {2, 9, 3}, {9, 1, 2}};
  CHECK(max_assignment(score) == std::vector<int>{2, 1, 0});
}
