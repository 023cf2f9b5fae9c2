#include "hsbm/eval.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hsbm {

std::vector<int> max_assignment(const std::vector<std::vector<std::int64_t>>& score) {
  // Hungarian method, shortest-augmenting-path formulation, on the negated
  // scores. O(k^3).
  const int n = static_cast<int>(score.size());
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      std::int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = -score[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

RecoveryReport misclassification(const std::vector<int>& z_hat,
                                 const std::vector<int>& z) {
  if (z_hat.size() != z.size())
    throw std::invalid_argument("misclassification: length mismatch");
  const std::int64_t n = static_cast<std::int64_t>(z.size());
  int k = 1;
  for (const int a : z_hat) {
    if (a < 0) throw std::invalid_argument("misclassification: negative label");
    k = std::max(k, a + 1);
  }
  for (const int b : z) {
    if (b < 0) throw std::invalid_argument("misclassification: negative label");
    k = std::max(k, b + 1);
  }

  RecoveryReport report;
  report.confusion.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::int64_t i = 0; i < n; ++i) ++report.confusion[z_hat[i]][z[i]];

  std::vector<int> best_pi(k);
  std::int64_t best_agree = -1;
  if (k <= 8) {
    std::vector<int> pi(k);
    std::iota(pi.begin(), pi.end(), 0);
    do {
      std::int64_t agree = 0;
      for (int b = 0; b < k; ++b) agree += report.confusion[pi[b]][b];
      if (agree > best_agree) {
        best_agree = agree;
        best_pi = pi;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  } else {
    std::vector<std::vector<std::int64_t>> score(k, std::vector<std::int64_t>(k));
    for (int b = 0; b < k; ++b)
      for (int a = 0; a < k; ++a) score[b][a] = report.confusion[a][b];
    best_pi = max_assignment(score);
    best_agree = 0;
    for (int b = 0; b < k; ++b) best_agree += report.confusion[best_pi[b]][b];
  }

  report.best_permutation = best_pi;
  report.misclassification =
      static_cast<double>(n - best_agree) / static_cast<double>(n);
  report.exact = (best_agree == n);
  return report;
}

}  // namespace hsbm
