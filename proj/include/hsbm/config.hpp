#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsbm/model.hpp"

namespace hsbm {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splitting-rate schedule gamma_n; the split probability is gamma_n/log(n).
struct GammaChoice {
  enum class Formula { kSqrtLogN, kPow };
  Formula formula = Formula::kSqrtLogN;
  double multiplier = 1.0;
  double exponent = 0.5;  // only for kPow: gamma = multiplier * (log n)^exponent

  double value_for(std::int64_t n) const;
};

struct OutputSpec {
  std::string path = "results.csv";
  enum class Format { kCsv, kJson } format = Format::kCsv;
};

struct ExperimentConfig {
  ModelParams model;
  GammaChoice gamma;
  double trim_constant = 20.0;     // tau = trim_constant * Q_max * gamma_n
  double radius_multiplier = 1.0;  // r = multiplier * gamma_n^2 / (n log gamma_n)
  int trials = 1;
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = runtime default
  std::vector<double> sweep;  // rate scale factors; empty means {1.0}
  OutputSpec output;
};

// Parses the JSON config format described in the README. Throws ConfigError
// on malformed input or invalid parameters (including scaled probabilities
// exceeding 1 for any sweep factor).
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace hsbm
