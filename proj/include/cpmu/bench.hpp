#ifndef CPMU_BENCH_HPP
#define CPMU_BENCH_HPP

#include "cpmu/mobius.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cpmu {

enum class BenchInstance {
  /// sigma at both ends of tau, present in the interior, no carrier.
  BothEnds,
  /// At least two occurrences and a left tail of length >= 2.
  LongTail,
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  std::size_t sigma_length = 3;
  BenchInstance instance = BenchInstance::BothEnds;
  /// Each size is re-run until this much wall time has accumulated.
  double min_seconds = 0.2;
};

struct BenchRow {
  std::size_t n = 0;
  /// Mean wall time of one mobius_fast call.
  double seconds = 0;
  std::size_t repetitions = 0;
  MobiusCase decided_by = MobiusCase::NotContained;
  int value = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Least-squares slope of log(seconds) against log(n); needs >= 2 sizes.
  std::optional<double> slope;
};

BenchReport run_benchmark(const BenchOptions &opts);

/// Least-squares slope of log(ys) against log(xs). Throws InvalidInput with
/// fewer than two points, mismatched lengths, or non-positive entries.
double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

} // namespace cpmu

#endif // CPMU_BENCH_HPP
