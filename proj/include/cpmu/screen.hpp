#ifndef CPMU_SCREEN_HPP
#define CPMU_SCREEN_HPP

#include "cpmu/permutation.hpp"

#include <optional>

namespace cpmu {

/**
 * Necessary conditions on mu(sigma, tau) that can be read off the bifix
 * structure of tau. None of them decides mu on its own.
 *
 * tail_sum is a + b when both tails are at most 1 and absent otherwise (a
 * tail of length >= 2 already forces mu = 0). excluded_value, when set, is
 * (-1)^(tail_sum + 1) and is a value mu cannot take.
 */
struct ScreenReport {
  TailProfile tails;
  std::optional<int> tail_sum;
  std::optional<int> excluded_value;
  bool forces_zero = false;
  /// Longest bifix of tau containing sigma with length <= |sigma| + 2.
  std::optional<Permutation> omega;
  /// Shortest prefix (suffix) pattern of tau holding the first (last) two
  /// occurrences of omega.
  std::optional<Permutation> alpha;
  std::optional<Permutation> beta;
};

/// Throws NotContained when sigma does not occur in tau.
ScreenReport screen(const Permutation &sigma, const Permutation &tau);

} // namespace cpmu

#endif // CPMU_SCREEN_HPP
