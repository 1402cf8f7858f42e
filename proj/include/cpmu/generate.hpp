#ifndef CPMU_GENERATE_HPP
#define CPMU_GENERATE_HPP

#include "cpmu/permutation.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace cpmu {

using Rng = std::mt19937_64;

Permutation random_permutation(std::size_t n, Rng &rng);

/// Rewrites the end window of `tau` on `side` so it is order isomorphic to
/// `pattern`, reusing the values already sitting in that window.
Permutation plant(const Permutation &tau, const Permutation &pattern, Side side);

/// Every distinct sigma <= tau (the standard forms of tau's windows), sorted.
std::vector<Permutation> patterns_of(const Permutation &tau);

/// Calls visit(sigma, tau) for every tau with 1 <= |tau| <= max_n and every
/// sigma <= tau, ordered by |tau|, then tau, then sigma.
void for_each_pair(std::size_t max_n,
                   const std::function<void(const Permutation &,
                                            const Permutation &)> &visit);

/// Uniform |tau| in [1, max_n], uniform tau, sigma the standard form of a
/// uniformly chosen window of tau.
std::pair<Permutation, Permutation> random_pair(std::size_t max_n, Rng &rng);

/// Random tau of length n with `sigma` planted at both ends, sigma also
/// occurring in the interior and no carrier element: the input that drives
/// the carrier scan through every length. Requires n >= 2|sigma| + 3.
Permutation worst_case_tau(const Permutation &sigma, std::size_t n, Rng &rng);

/// Random pair with at least two occurrences of sigma and a tail of length
/// >= 2. |tau| is drawn from [min_n, max_n], min_n >= 5.
std::pair<Permutation, Permutation>
long_tail_pair(std::size_t min_n, std::size_t max_n, Rng &rng);

/// Random tau of length |sigma| + left + right in which sigma occurs exactly
/// once, with the given tails.
Permutation single_occurrence_tau(const Permutation &sigma, std::size_t left,
                                  std::size_t right, Rng &rng);

} // namespace cpmu

#endif // CPMU_GENERATE_HPP
