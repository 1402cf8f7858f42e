#include "cpmu/bench.hpp"

#include "cpmu/error.hpp"
#include "cpmu/generate.hpp"

#include <chrono>
#include <cmath>

namespace cpmu {

namespace {

Permutation long_tail_tau(const Permutation &sigma, std::size_t n, Rng &rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto tau = plant(random_permutation(n, rng), sigma, Side::Right);
    const auto starts = occurrences(sigma, tau);
    if (starts.size() >= 2 && starts.front() >= 3)
      return tau;
  }
  throw InvalidInput("could not draw a long-tail instance for " + sigma.str());
}

} // namespace

BenchReport run_benchmark(const BenchOptions &opts) {
  if (opts.sizes.empty())
    throw InvalidInput("bench needs at least one size");
  BenchReport report;
  Rng rng(opts.seed);
  const auto sigma = random_permutation(opts.sigma_length, rng);

  std::vector<double> xs;
  std::vector<double> ys;
  for (auto n : opts.sizes) {
    const auto tau = opts.instance == BenchInstance::BothEnds
                         ? worst_case_tau(sigma, n, rng)
                         : long_tail_tau(sigma, n, rng);
    BenchRow row;
    row.n = n;
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    double elapsed = 0;
    do {
      const auto r = mobius_fast(sigma, tau);
      row.decided_by = r.decided_by;
      row.value = r.value;
      ++row.repetitions;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < opts.min_seconds);
    row.seconds = elapsed / static_cast<double>(row.repetitions);
    xs.push_back(static_cast<double>(n));
    ys.push_back(row.seconds);
    report.rows.push_back(row);
  }
  if (xs.size() >= 2)
    report.slope = fit_loglog_slope(xs, ys);
  return report;
}

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw InvalidInput("slope fit needs at least two (x, y) points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0 || ys[i] <= 0)
      throw InvalidInput("slope fit needs positive values");
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(xs.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0)
    throw InvalidInput("slope fit needs at least two distinct sizes");
  return (m * sxy - sx * sy) / denom;
}

} // namespace cpmu
