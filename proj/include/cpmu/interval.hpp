#ifndef CPMU_INTERVAL_HPP
#define CPMU_INTERVAL_HPP

#include "cpmu/permutation.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cpmu {

/// Permutations covered by t: t with its first or its last letter deleted.
/// One element iff t is monotone. Throws InvalidInput for |t| = 1.
std::set<Permutation> covered_by(const Permutation &t);

/**
 * An explicit interval [sigma, tau] of the consecutive-pattern poset.
 *
 * Elements are sorted by (length, lexicographic value order), which is a
 * linear extension of the containment order: sigma is element 0 and tau is
 * the last element. The order relation is stored as a dense matrix.
 */
class Interval {
public:
  const Permutation &sigma() const { return elements_.front(); }
  const Permutation &tau() const { return elements_.back(); }
  std::size_t rank() const { return tau().size() - sigma().size(); }
  std::size_t size() const { return elements_.size(); }

  std::span<const Permutation> elements() const { return elements_; }
  const Permutation &operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation &p) const;
  bool contains(const Permutation &p) const { return index_of(p).has_value(); }

  /// elements()[i] <= elements()[j] in consecutive containment.
  bool leq(std::size_t i, std::size_t j) const {
    return order_[i * elements_.size() + j] != 0;
  }

private:
  friend Interval build_interval(const Permutation &, const Permutation &);

  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<char> order_;
};

/// Every standardized window of tau that contains sigma, deduplicated.
/// Throws NotContained when sigma does not occur in tau.
Interval build_interval(const Permutation &sigma, const Permutation &tau);

struct HasseDiagram {
  Permutation sigma;
  Permutation tau;
  std::vector<Permutation> nodes;
  /// (lower, upper) node indices, sorted; upper covers lower.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t rank() const { return tau.size() - sigma.size(); }
};

HasseDiagram hasse_edges(const Interval &iv);

struct OracleOptions {
  std::size_t max_length = 60;
};

/// mu(sigma, z) for every element z of the interval, indexed like
/// iv.elements(), from mu(x,x) = 1 and mu(x,y) = -sum_{x<=z<y} mu(x,z).
std::vector<int> mobius_from_bottom(const Interval &iv);

/// mu(z, tau) for every element z, from mu(x,y) = -sum_{x<z<=y} mu(z,y).
std::vector<int> mobius_to_top(const Interval &iv);

/// Brute-force mu(sigma, tau). Returns 0 when sigma does not occur in tau.
/// Throws OracleTooLarge when |tau| exceeds opts.max_length.
int mobius_oracle(const Permutation &sigma, const Permutation &tau,
                  const OracleOptions &opts = {});

/// Same value as mobius_oracle, computed from the top of the interval down.
int mobius_oracle_topdown(const Permutation &sigma, const Permutation &tau,
                          const OracleOptions &opts = {});

} // namespace cpmu

#endif // CPMU_INTERVAL_HPP
