// Compares the OpenMP kernels against their serial reference on a
// medium-sized instance and reports wall times and speedups.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hsbm/kernels.hpp"
#include "hsbm/refine.hpp"
#include "hsbm/sampler.hpp"

namespace {

template <typename F>
double time_ms(F&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    best = std::min(best, ms);
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool match) {
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              match ? "outputs identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel paths run serially\n");
#endif

  hsbm::ModelParams params;
  params.n = 900;
  params.k = 3;
  params.d = 3;
  params.p = {0.4, 0.35, 0.25};
  const hsbm::AssignmentTable edge_table(params.k, params.d);
  params.rates.assign(edge_table.size(), 4.0);
  for (int t = 0; t < edge_table.size(); ++t) {
    const auto& vec = edge_table.at(t);
    if (*std::max_element(vec.begin(), vec.end()) == params.d)
      params.rates[t] = 36.0;
  }

  const std::uint64_t seed = 20240817;
  const std::vector<int> labels = hsbm::sample_labels(params, seed);
  const double gamma_n = std::sqrt(std::log(static_cast<double>(params.n)));

  // pairwise column distances
  {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(params.n, params.n);
    hsbm::SplitMix64 rng(seed);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = rng.next_double();
    std::vector<std::int32_t> sources(params.n), targets(64);
    std::iota(sources.begin(), sources.end(), 0);
    std::iota(targets.begin(), targets.end(), 0);
    Eigen::MatrixXd out_s, out_p;
    const double ts =
        time_ms([&] { out_s = hsbm::kernels::serial::pairwise_sqdist(m, sources, targets); });
    const double tp =
        time_ms([&] { out_p = hsbm::kernels::pairwise_sqdist(m, sources, targets); });
    report("pairwise_sqdist", ts, tp, out_s == out_p);
  }

  // expected Laplacian
  {
    Eigen::MatrixXd out_s, out_p;
    const double ts = time_ms(
        [&] { out_s = hsbm::kernels::serial::expected_laplacian(params, labels, gamma_n); });
    const double tp = time_ms(
        [&] { out_p = hsbm::kernels::expected_laplacian(params, labels, gamma_n); });
    report("expected_laplacian", ts, tp, out_s == out_p);
  }

  // refinement pass
  {
    const hsbm::Hypergraph g = hsbm::sample_hsbm(
        params, labels, seed, hsbm::SampleStrategy::kStratified);
    const hsbm::SplitPair split = hsbm::split_hypergraph(g, gamma_n, seed);
    std::vector<int> out_s, out_p;
    const double ts = time_ms(
        [&] { out_s = hsbm::serial::refine_all(split.g2, labels, params, gamma_n); });
    const double tp =
        time_ms([&] { out_p = hsbm::refine_all(split.g2, labels, params, gamma_n); });
    report("refine_all", ts, tp, out_s == out_p);
  }
  return 0;
}
