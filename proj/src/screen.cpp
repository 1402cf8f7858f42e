#include "cpmu/screen.hpp"

#include "cpmu/mobius.hpp"

#include <algorithm>

namespace cpmu {

namespace {

struct BifixFacts {
  const Permutation &tau;

  bool has(std::size_t len) const {
    return len >= 1 && len <= tau.size() && is_bifix(tau, len);
  }
  bool has_monotone(std::size_t len) const {
    return has(len) && is_monotone(affix_pattern(tau, len, Side::Left));
  }
  bool has_monotone_alternating(std::size_t len) const {
    return has(len) &&
           is_monotone_alternating(affix_pattern(tau, len, Side::Left));
  }
  // Bifix of length len whose end of length len-1 on `side` is monotone.
  bool has_with_monotone_end(std::size_t len, Side side) const {
    if (!has(len))
      return false;
    return is_monotone(
        affix_pattern(affix_pattern(tau, len, Side::Left), len - 1, side));
  }
};

} // namespace

ScreenReport screen(const Permutation &sigma, const Permutation &tau) {
  ScreenReport report;
  report.tails = tails(sigma, tau);
  const auto [a, b] = report.tails;
  if (a >= 2 || b >= 2) {
    report.forces_zero = true;
    return report;
  }

  const auto k = sigma.size();
  const auto n = tau.size();
  const int x = static_cast<int>(a + b);
  report.tail_sum = x;
  const int opposite_sign = (x % 2 == 0) ? -1 : 1; // (-1)^(x+1)

  // With x = 1 the statements are phrased for sigma sitting at the right
  // end of tau; when it sits at the left end, suffix and prefix swap.
  const Side end_side = (x == 1 && b == 1) ? Side::Left : Side::Right;
  const BifixFacts bifix{tau};

  bool excluded = false;
  bool zero = false;
  switch (x) {
  case 0: {
    const bool mono_next = bifix.has_monotone(k + 1);
    excluded = !mono_next;
    const bool sigma_is_socle = [&] {
      if (sigma == tau)
        return true;
      auto chain = socle_chain(sigma, tau);
      return !chain.empty() && chain.back() == sigma;
    }();
    zero = !sigma_is_socle && !mono_next &&
           !bifix.has_monotone_alternating(k + 2);
    break;
  }
  case 1: {
    const bool mono_end = bifix.has_with_monotone_end(k + 2, end_side);
    excluded = !mono_end;
    zero = !bifix.has(k + 1) && !mono_end;
    break;
  }
  default:
    excluded = true;
    zero = !bifix.has(k + 2);
    break;
  }

  // Non-monotone end of length |sigma| + x also rules out (-1)^(x+1).
  if (k + x <= n && !is_monotone(affix_pattern(tau, k + x, end_side)))
    excluded = true;

  if (excluded)
    report.excluded_value = opposite_sign;

  for (std::size_t len = std::min(k + 2, n); len >= k; --len) {
    if (!bifix.has(len))
      continue;
    auto candidate = affix_pattern(tau, len, Side::Left);
    if (contains(candidate, sigma)) {
      report.omega = std::move(candidate);
      break;
    }
  }
  if (report.omega) {
    const auto starts = occurrences(*report.omega, tau);
    if (starts.size() >= 2) {
      const auto w = report.omega->size();
      report.alpha = affix_pattern(tau, starts[1] - 1 + w, Side::Left);
      report.beta =
          affix_pattern(tau, n - (starts[starts.size() - 2] - 1), Side::Right);
      if (*report.alpha != *report.beta)
        zero = true;
    }
  }

  report.forces_zero = zero;
  return report;
}

} // namespace cpmu
