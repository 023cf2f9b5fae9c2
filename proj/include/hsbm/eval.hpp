#pragma once

#include <cstdint>
#include <vector>

namespace hsbm {

// Alignment-aware accuracy of a label estimate against the ground truth.
struct RecoveryReport {
  double misclassification = 0.0;
  std::vector<int> best_permutation;  // pi: true label -> estimated label
  bool exact = false;
  std::vector<std::vector<std::int64_t>> confusion;  // [estimated][true]
};

// Minimum over all k! label permutations of the disagreement proportion.
// Exhaustive for k <= 8, optimal assignment on the confusion matrix beyond
// (equivalent: the objective is a sum of per-pair agreement counts).
RecoveryReport misclassification(const std::vector<int>& z_hat,
                                 const std::vector<int>& z);

// Maximum-total assignment on a square score matrix (Hungarian method);
// returns the column assigned to each row.
std::vector<int> max_assignment(const std::vector<std::vector<std::int64_t>>& score);

}  // namespace hsbm
