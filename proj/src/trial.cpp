#include "hsbm/trial.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hsbm/eval.hpp"
#include "hsbm/gch.hpp"
#include "hsbm/laplacian.hpp"
#include "hsbm/refine.hpp"
#include "hsbm/rng.hpp"
#include "hsbm/sampler.hpp"
#include "hsbm/spectral.hpp"

namespace hsbm {

namespace {

constexpr std::uint64_t kScaleTagBase = 0x5ca1e000;
constexpr std::uint64_t kTrialTagBase = 0x7e1a1000;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::size_t scale_index,
                         std::size_t trial_index) {
  return derive_seed(derive_seed(master, kScaleTagBase + scale_index),
                     kTrialTagBase + trial_index);
}

TrialRecord run_trial(const ExperimentConfig& cfg, double scale,
                      std::uint64_t seed) {
  TrialRecord rec;
  rec.seed = seed;
  rec.scale = scale;
  try {
    const ModelParams params = cfg.model.scaled(scale);
    validate(params);
    const GchResult gch = gch_threshold(params);
    rec.gch = gch.value;
    rec.gch_pair = gch.pair_ij;
    rec.xi = in_xi(params).member;

    const double gamma_n = cfg.gamma.value_for(params.n);
    if (!(std::log(gamma_n) > 0.0))
      throw std::runtime_error("trial: log(gamma_n) <= 0, radius undefined");

    auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> truth = sample_labels(params, seed);
    const Hypergraph g =
        sample_hsbm(params, truth, seed, choose_strategy(params.n, params.d));
    const SplitPair split = split_hypergraph(g, gamma_n, seed);
    rec.sample_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const LaplacianMatrix lap = build_laplacian(split.g1);
    const double tau = cfg.trim_constant * params.rate_max() * gamma_n;
    TrimmedSpectral spec = trim(lap, tau);
    spec.rank_k = rank_k_approx(spec.trimmed, params.k);
    const double radius = cfg.radius_multiplier * gamma_n * gamma_n /
                          (static_cast<double>(params.n) * std::log(gamma_n));
    SplitMix64 spectral_rng = make_stream(seed, kSpectralStream);
    const std::vector<int> initial =
        spectral_cluster(spec, params.k, radius, spectral_rng);
    rec.stage1_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const std::vector<int> final_labels =
        refine_all(split.g2, initial, params, gamma_n);
    rec.stage2_ms = ms_since(t0);

    rec.stage1_mis = misclassification(initial, truth).misclassification;
    const RecoveryReport report = misclassification(final_labels, truth);
    rec.final_mis = report.misclassification;
    rec.exact = report.exact;
  } catch (const std::exception& e) {
    rec.failure = e.what();
    rec.stage1_mis = 1.0;
    rec.final_mis = 1.0;
    rec.exact = false;
  }
  return rec;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
  const std::vector<double> scales =
      cfg.sweep.empty() ? std::vector<double>{1.0} : cfg.sweep;
  const std::size_t n_scales = scales.size();
  const std::size_t per_scale = static_cast<std::size_t>(cfg.trials);

  SweepResult result;
  result.records.assign(n_scales, std::vector<TrialRecord>(per_scale));

  const std::int64_t total = static_cast<std::int64_t>(n_scales * per_scale);
#ifdef _OPENMP
  const int threads = cfg.workers > 0 ? cfg.workers : 0;
  if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < total; ++i) {
      const std::size_t s = static_cast<std::size_t>(i) / per_scale;
      const std::size_t t = static_cast<std::size_t>(i) % per_scale;
      result.records[s][t] =
          run_trial(cfg, scales[s], trial_seed(cfg.seed, s, t));
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) {
      const std::size_t s = static_cast<std::size_t>(i) / per_scale;
      const std::size_t t = static_cast<std::size_t>(i) % per_scale;
      result.records[s][t] =
          run_trial(cfg, scales[s], trial_seed(cfg.seed, s, t));
    }
  }
#else
  for (std::int64_t i = 0; i < total; ++i) {
    const std::size_t s = static_cast<std::size_t>(i) / per_scale;
    const std::size_t t = static_cast<std::size_t>(i) % per_scale;
    result.records[s][t] = run_trial(cfg, scales[s], trial_seed(cfg.seed, s, t));
  }
#endif

  // Deterministic fold in (scale, trial) order.
  for (std::size_t s = 0; s < n_scales; ++s) {
    SweepRow row;
    row.scale = scales[s];
    row.trials = cfg.trials;
    row.seed = cfg.seed;
    const ModelParams scaled = cfg.model.scaled(scales[s]);
    row.gch = gch_threshold(scaled).value;
    std::int64_t exact_count = 0;
    double s1 = 0.0, fin = 0.0;
    for (const TrialRecord& rec : result.records[s]) {
      exact_count += rec.exact ? 1 : 0;
      s1 += rec.stage1_mis;
      fin += rec.final_mis;
    }
    row.exact_rate = static_cast<double>(exact_count) / cfg.trials;
    row.stage1_err_mean = s1 / cfg.trials;
    row.final_err_mean = fin / cfg.trials;
    result.rows.push_back(row);
  }

  for (std::size_t s = 0; s + 1 < result.rows.size(); ++s) {
    const double a = result.rows[s].gch, b = result.rows[s + 1].gch;
    if (!result.threshold_crossing && (a - 1.0) * (b - 1.0) <= 0.0 && a != b) {
      result.threshold_crossing =
          result.rows[s].scale + (1.0 - a) *
                                     (result.rows[s + 1].scale - result.rows[s].scale) /
                                     (b - a);
    }
    const double drop = result.rows[s].exact_rate - result.rows[s + 1].exact_rate;
    if (drop > 0.0) {
      ++result.rate_inversions;
      result.worst_inversion = std::max(result.worst_inversion, drop);
    }
  }
  return result;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "scale,gch,trials,exact_rate,stage1_err_mean,final_err_mean,seed\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.scale) << ',' << format_double(r.gch) << ','
        << r.trials << ',' << format_double(r.exact_rate) << ','
        << format_double(r.stage1_err_mean) << ','
        << format_double(r.final_err_mean) << ',' << r.seed << '\n';
  }
  return out.str();
}

std::string format_json(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    out << (i ? ",\n " : "\n ") << "{\"scale\": " << format_double(r.scale)
        << ", \"gch\": " << format_double(r.gch) << ", \"trials\": " << r.trials
        << ", \"exact_rate\": " << format_double(r.exact_rate)
        << ", \"stage1_err_mean\": " << format_double(r.stage1_err_mean)
        << ", \"final_err_mean\": " << format_double(r.final_err_mean)
        << ", \"seed\": " << r.seed << "}";
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
  return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit: cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("emit: write failed: " + path);
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  write_file(path, format_csv(rows));
}

void emit_json(const std::vector<SweepRow>& rows, const std::string& path) {
  write_file(path, format_json(rows));
}

std::vector<SweepRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "scale,gch,trials,exact_rate,stage1_err_mean,final_err_mean,seed")
    throw std::runtime_error("parse_csv: bad header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SweepRow r;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    if (!(fields >> r.scale >> r.gch >> r.trials >> r.exact_rate >>
          r.stage1_err_mean >> r.final_err_mean >> r.seed))
      throw std::runtime_error("parse_csv: bad row");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hsbm
