#ifndef CPMU_CROSSCHECK_HPP
#define CPMU_CROSSCHECK_HPP

#include "cpmu/permutation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace cpmu {

struct CrosscheckOptions {
  bool verify_uniqueness = false;
  bool check_screen = true;
  /// Also assert that mu(sigma, z) sums to zero over the whole interval.
  bool check_interval_sum = false;
};

struct Mismatch {
  Permutation sigma;
  Permutation tau;
  int fast = 0;
  int oracle = 0;
  int topdown = 0;
  std::string what;
};

struct CrosscheckSummary {
  std::size_t pairs = 0;
  /// Counts of mu = -1, 0, 1.
  std::array<std::size_t, 3> distribution{};
  std::size_t mismatches = 0;
  /// The first failing pair in enumeration order (the smallest one in
  /// exhaustive mode).
  std::optional<Mismatch> first_mismatch;
};

/// Compares mobius_fast against both oracle routes for one pair; returns a
/// description of the first disagreement, if any.
std::optional<Mismatch> check_pair(const Permutation &sigma,
                                   const Permutation &tau,
                                   const CrosscheckOptions &opts);

/// Every tau with |tau| <= max_n and every sigma <= tau.
CrosscheckSummary crosscheck_exhaustive(std::size_t max_n,
                                        const CrosscheckOptions &opts);

/// `samples` seeded random pairs with |tau| <= max_n.
CrosscheckSummary crosscheck_random(std::size_t max_n, std::size_t samples,
                                    std::uint64_t seed,
                                    const CrosscheckOptions &opts);

} // namespace cpmu

#endif // CPMU_CROSSCHECK_HPP
