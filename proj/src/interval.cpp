#include "cpmu/interval.hpp"

#include "cpmu/error.hpp"

#include <algorithm>

namespace cpmu {

std::set<Permutation> covered_by(const Permutation &t) {
  if (t.size() < 2)
    throw InvalidInput("a permutation of length 1 covers nothing");
  return {trim(t, true, false), trim(t, false, true)};
}

std::optional<std::size_t> Interval::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Interval build_interval(const Permutation &sigma, const Permutation &tau) {
  if (!contains(tau, sigma))
    throw NotContained(sigma.str() + " does not occur in " + tau.str());

  const auto n = tau.size();
  const auto k = sigma.size();
  const auto v = tau.values();

  // z <= tau iff z is the standard form of a window of tau.
  std::set<Permutation> found;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = k; i + len <= n; ++len) {
      auto w = standardize(v.subspan(i, len));
      if (found.count(w) == 0 && contains(w, sigma))
        found.insert(std::move(w));
    }
  }

  Interval iv;
  iv.elements_.assign(found.begin(), found.end());
  const auto m = iv.elements_.size();
  iv.index_.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    iv.index_.emplace(iv.elements_[i], i);

  // Everything below z in the interval is a window of z containing sigma,
  // and every such window is an element. Enumerate them per element.
  iv.order_.assign(m * m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const auto &z = iv.elements_[j];
    const auto zv = z.values();
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t len = k; i + len <= z.size(); ++len) {
        auto it = iv.index_.find(standardize(zv.subspan(i, len)));
        if (it != iv.index_.end())
          iv.order_[it->second * m + j] = 1;
      }
    }
  }
  return iv;
}

HasseDiagram hasse_edges(const Interval &iv) {
  HasseDiagram h{iv.sigma(), iv.tau(),
                 std::vector<Permutation>(iv.elements().begin(),
                                          iv.elements().end()),
                 {}};
  for (std::size_t j = 0; j < iv.size(); ++j) {
    if (iv[j].size() < 2)
      continue;
    for (const auto &below : covered_by(iv[j])) {
      if (auto i = iv.index_of(below))
        h.edges.emplace_back(*i, j);
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

std::vector<int> mobius_from_bottom(const Interval &iv) {
  const auto m = iv.size();
  std::vector<int> mu(m, 0);
  mu[0] = 1;
  for (std::size_t j = 1; j < m; ++j) {
    int sum = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (iv.leq(i, j))
        sum += mu[i];
    }
    mu[j] = -sum;
  }
  return mu;
}

std::vector<int> mobius_to_top(const Interval &iv) {
  const auto m = iv.size();
  std::vector<int> mu(m, 0);
  mu[m - 1] = 1;
  for (std::size_t j = m - 1; j-- > 0;) {
    int sum = 0;
    for (std::size_t i = j + 1; i < m; ++i) {
      if (iv.leq(j, i))
        sum += mu[i];
    }
    mu[j] = -sum;
  }
  return mu;
}

namespace {

void check_guard(const Permutation &tau, const OracleOptions &opts) {
  if (tau.size() > opts.max_length)
    throw OracleTooLarge("oracle bound is " + std::to_string(opts.max_length) +
                         ", got |tau| = " + std::to_string(tau.size()));
}

} // namespace

int mobius_oracle(const Permutation &sigma, const Permutation &tau,
                  const OracleOptions &opts) {
  check_guard(tau, opts);
  if (!contains(tau, sigma))
    return 0;
  return mobius_from_bottom(build_interval(sigma, tau)).back();
}

int mobius_oracle_topdown(const Permutation &sigma, const Permutation &tau,
                          const OracleOptions &opts) {
  check_guard(tau, opts);
  if (!contains(tau, sigma))
    return 0;
  return mobius_to_top(build_interval(sigma, tau)).front();
}

} // namespace cpmu
