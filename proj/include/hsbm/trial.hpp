#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsbm/config.hpp"

namespace hsbm {

// One seeded end-to-end run: generate, split, cluster, refine, evaluate.
struct TrialRecord {
  std::uint64_t seed = 0;
  double scale = 1.0;
  double gch = 0.0;
  std::pair<int, int> gch_pair{-1, -1};
  bool xi = false;
  double stage1_mis = 1.0;
  double final_mis = 1.0;
  bool exact = false;
  double sample_ms = 0.0;
  double stage1_ms = 0.0;
  double stage2_ms = 0.0;
  std::string failure;  // empty on success

  bool ok() const { return failure.empty(); }
};

// Per-trial seed inside a sweep, derived from (master, scale index, trial
// index) so trials can run in any order on any number of workers.
std::uint64_t trial_seed(std::uint64_t master, std::size_t scale_index,
                         std::size_t trial_index);

TrialRecord run_trial(const ExperimentConfig& cfg, double scale,
                      std::uint64_t seed);

struct SweepRow {
  double scale = 1.0;
  double gch = 0.0;
  int trials = 0;
  double exact_rate = 0.0;
  double stage1_err_mean = 1.0;
  double final_err_mean = 1.0;
  std::uint64_t seed = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::vector<TrialRecord>> records;  // per scale, in trial order
  std::optional<double> threshold_crossing;  // scale where gch crosses 1
  int rate_inversions = 0;      // adjacent exact-rate decreases
  double worst_inversion = 0.0; // largest such decrease
};

// Runs cfg.trials trials per sweep scale (default {1.0}), concurrently up to
// cfg.workers, and aggregates in (scale, trial) order regardless of
// completion order.
SweepResult run_sweep(const ExperimentConfig& cfg);

// CSV columns: scale,gch,trials,exact_rate,stage1_err_mean,final_err_mean,seed.
// Floats carry 17 significant digits; files end with a newline.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
void emit_json(const std::vector<SweepRow>& rows, const std::string& path);
std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(const std::string& text);

}  // namespace hsbm
