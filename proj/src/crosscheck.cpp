#include "cpmu/crosscheck.hpp"

#include "cpmu/error.hpp"
#include "cpmu/generate.hpp"
#include "cpmu/interval.hpp"
#include "cpmu/mobius.hpp"
#include "cpmu/screen.hpp"

#include <numeric>

namespace cpmu {

namespace {

void record(CrosscheckSummary &summary, int value,
            std::optional<Mismatch> failure) {
  ++summary.pairs;
  if (value >= -1 && value <= 1)
    ++summary.distribution[static_cast<std::size_t>(value + 1)];
  if (failure) {
    ++summary.mismatches;
    if (!summary.first_mismatch)
      summary.first_mismatch = std::move(failure);
  }
}

// Fills every value; `what` stays empty when the pair checks out.
Mismatch evaluate(const Permutation &sigma, const Permutation &tau,
                  const CrosscheckOptions &opts) {
  Mismatch m{sigma, tau, 0, 0, 0, {}};
  try {
    m.fast = mobius_fast(sigma, tau, {.verify_uniqueness = opts.verify_uniqueness})
                 .value;
  } catch (const CarrierNotUnique &e) {
    m.what = e.what();
    return m;
  }
  m.oracle = mobius_oracle(sigma, tau);
  m.topdown = mobius_oracle_topdown(sigma, tau);

  if (m.fast < -1 || m.fast > 1) {
    m.what = "value outside {-1, 0, 1}";
    return m;
  }
  if (m.fast != m.oracle || m.oracle != m.topdown) {
    m.what = "fast and oracle disagree";
    return m;
  }
  if (!contains(tau, sigma))
    return m;

  if (opts.check_screen) {
    const auto report = screen(sigma, tau);
    if (report.excluded_value && *report.excluded_value == m.fast) {
      m.what = "screen excludes the computed value";
      return m;
    }
    if (report.forces_zero && m.fast != 0) {
      m.what = "screen forces zero on a nonzero value";
      return m;
    }
  }
  if (opts.check_interval_sum && sigma != tau) {
    const auto mu = mobius_from_bottom(build_interval(sigma, tau));
    if (std::accumulate(mu.begin(), mu.end(), 0) != 0) {
      m.what = "mu(sigma, z) does not sum to zero over the interval";
      return m;
    }
  }
  return m;
}

void run_one(CrosscheckSummary &summary, const Permutation &sigma,
             const Permutation &tau, const CrosscheckOptions &opts) {
  auto m = evaluate(sigma, tau, opts);
  const int value = m.fast;
  record(summary, value,
         m.what.empty() ? std::nullopt : std::optional<Mismatch>(std::move(m)));
}

} // namespace

std::optional<Mismatch> check_pair(const Permutation &sigma,
                                   const Permutation &tau,
                                   const CrosscheckOptions &opts) {
  auto m = evaluate(sigma, tau, opts);
  if (m.what.empty())
    return std::nullopt;
  return m;
}

CrosscheckSummary crosscheck_exhaustive(std::size_t max_n,
                                        const CrosscheckOptions &opts) {
  CrosscheckSummary summary;
  for_each_pair(max_n, [&](const Permutation &sigma, const Permutation &tau) {
    run_one(summary, sigma, tau, opts);
  });
  return summary;
}

CrosscheckSummary crosscheck_random(std::size_t max_n, std::size_t samples,
                                    std::uint64_t seed,
                                    const CrosscheckOptions &opts) {
  CrosscheckSummary summary;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto [sigma, tau] = random_pair(max_n, rng);
    run_one(summary, sigma, tau, opts);
  }
  return summary;
}

} // namespace cpmu
