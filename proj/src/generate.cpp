#include "cpmu/generate.hpp"

#include "cpmu/error.hpp"
#include "cpmu/mobius.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cpmu {

namespace {

std::size_t uniform(std::size_t lo, std::size_t hi, Rng &rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Attempts are bounded so a bad parameter choice fails loudly instead of
// spinning forever.
constexpr int kMaxAttempts = 100000;

} // namespace

Permutation random_permutation(std::size_t n, Rng &rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

Permutation plant(const Permutation &tau, const Permutation &pattern,
                  Side side) {
  const auto n = tau.size();
  const auto k = pattern.size();
  if (k > n)
    throw InvalidInput("pattern longer than the permutation it is planted in");
  std::vector<int> v(tau.values().begin(), tau.values().end());
  const std::size_t offset = side == Side::Left ? 0 : n - k;
  std::vector<int> pool(v.begin() + offset, v.begin() + offset + k);
  std::sort(pool.begin(), pool.end());
  for (std::size_t i = 0; i < k; ++i)
    v[offset + i] = pool[pattern[i] - 1];
  return Permutation(std::move(v));
}

std::vector<Permutation> patterns_of(const Permutation &tau) {
  std::set<Permutation> found;
  const auto v = tau.values();
  for (std::size_t i = 0; i < tau.size(); ++i) {
    for (std::size_t len = 1; i + len <= tau.size(); ++len)
      found.insert(standardize(v.subspan(i, len)));
  }
  return {found.begin(), found.end()};
}

void for_each_pair(std::size_t max_n,
                   const std::function<void(const Permutation &,
                                            const Permutation &)> &visit) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation tau(v);
      for (const auto &sigma : patterns_of(tau))
        visit(sigma, tau);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

std::pair<Permutation, Permutation> random_pair(std::size_t max_n, Rng &rng) {
  const auto n = uniform(1, max_n, rng);
  auto tau = random_permutation(n, rng);
  const auto start = uniform(0, n - 1, rng);
  const auto len = uniform(1, n - start, rng);
  auto sigma = standardize(tau.values().subspan(start, len));
  return {std::move(sigma), std::move(tau)};
}

Permutation worst_case_tau(const Permutation &sigma, std::size_t n, Rng &rng) {
  const auto k = sigma.size();
  if (n < 2 * k + 3)
    throw InvalidInput("worst-case instance needs |tau| >= 2|sigma| + 3");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto tau = plant(plant(random_permutation(n, rng), sigma, Side::Left),
                     sigma, Side::Right);
    if (!contains(trim(tau, true, true), sigma))
      continue;
    if (find_carrier(sigma, tau).carrier)
      continue;
    return tau;
  }
  throw InvalidInput("could not draw a carrier-free instance for " + sigma.str());
}

std::pair<Permutation, Permutation>
long_tail_pair(std::size_t min_n, std::size_t max_n, Rng &rng) {
  if (min_n < 5 || max_n < min_n)
    throw InvalidInput("long-tail pairs need 5 <= min_n <= max_n");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto n = uniform(min_n, max_n, rng);
    auto tau = random_permutation(n, rng);
    const auto len = uniform(2, std::min<std::size_t>(4, n - 3), rng);
    const auto start = uniform(0, n - len, rng);
    auto sigma = standardize(tau.values().subspan(start, len));
    const auto starts = occurrences(sigma, tau);
    if (starts.size() < 2)
      continue;
    const auto tp = tails(sigma, tau);
    if (tp.left >= 2 || tp.right >= 2)
      return {std::move(sigma), std::move(tau)};
  }
  throw InvalidInput("could not draw a long-tail pair");
}

Permutation single_occurrence_tau(const Permutation &sigma, std::size_t left,
                                  std::size_t right, Rng &rng) {
  const auto n = sigma.size() + left + right;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto base = random_permutation(n, rng);
    std::vector<int> v(base.values().begin(), base.values().end());
    std::vector<int> pool(v.begin() + left, v.begin() + left + sigma.size());
    std::sort(pool.begin(), pool.end());
    for (std::size_t i = 0; i < sigma.size(); ++i)
      v[left + i] = pool[sigma[i] - 1];
    Permutation tau(std::move(v));
    if (occurrences(sigma, tau).size() == 1)
      return tau;
  }
  throw InvalidInput("could not place a single occurrence of " + sigma.str());
}

} // namespace cpmu
