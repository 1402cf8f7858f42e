#ifndef CPMU_MOBIUS_HPP
#define CPMU_MOBIUS_HPP

#include "cpmu/permutation.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cpmu {

/// Which rule decided a Möbius value.
enum class MobiusCase {
  NotContained,
  Equal,
  SmallRank,
  OneOccurrence,
  InteriorAbsent,
  LongTail,
  NoCarrier,
  ViaSocle,
};

std::string_view to_string(MobiusCase c);
std::optional<MobiusCase> parse_mobius_case(std::string_view s);

struct MobiusResult {
  int value = 0;
  MobiusCase decided_by = MobiusCase::NotContained;
  /// Successive carrier elements, each a bifix pattern of the previous one
  /// (of tau for the first). Non-empty only for ViaSocle and InteriorAbsent;
  /// in the latter the carrier is sigma itself.
  std::vector<Permutation> carrier_chain;

  std::optional<Permutation> socle() const {
    if (carrier_chain.empty())
      return std::nullopt;
    return carrier_chain.back();
  }

  friend bool operator==(const MobiusResult &, const MobiusResult &) = default;
};

struct FastOptions {
  /// Scan every candidate length and throw CarrierNotUnique if two accept.
  bool verify_uniqueness = false;
  /// Skip the long-tail shortcut so the carrier iteration is carried out
  /// and reported even when a tail of length >= 2 already forces mu = 0.
  /// The value is the same either way.
  bool trace_carriers = false;
};

MobiusResult mobius_fast(const Permutation &sigma, const Permutation &tau,
                         const FastOptions &opts = {});

/// Rank <= 2 intervals: 1, -1, or (rank 2) 0 for monotone tau and 1
/// otherwise. A rank-2 input needs at least two occurrences of sigma; with a
/// single occurrence the tails decide instead (see mobius_one_occurrence).
/// Throws InvalidInput otherwise, NotContained when sigma does not occur.
int mobius_small_rank(const Permutation &sigma, const Permutation &tau);

/// Value of an interval in which sigma occurs exactly once, from its tails.
int mobius_one_occurrence(const TailProfile &tp);

struct CarrierSearchReport {
  /// Prefix patterns of tau in [sigma, tau] strictly below tau minus its
  /// last letter and not contained in the interior, by increasing length.
  std::vector<Permutation> prefix_chain;
  /// Same with suffix patterns.
  std::vector<Permutation> suffix_chain;
  std::optional<Permutation> carrier;
};

struct CarrierSearchOptions {
  bool verify_uniqueness = false;
  bool collect_chains = false;
};

/**
 * Looks for the carrier element of [sigma, tau]: the bifix pattern of tau
 * that contains sigma but does not occur in the interior of tau.
 *
 * Candidates are prefix patterns of length |tau|-2 down to |sigma|; the
 * first acceptance wins. When sigma does not occur in the interior, sigma
 * itself is the carrier. Requires sigma <= tau and rank at least 3; throws
 * InvalidInput otherwise.
 */
CarrierSearchReport find_carrier(const Permutation &sigma,
                                 const Permutation &tau,
                                 const CarrierSearchOptions &opts = {});

/// Carriers found by iterating the dispatcher with trace_carriers set; the
/// last one is the socle.
std::vector<Permutation> socle_chain(const Permutation &sigma,
                                     const Permutation &tau);

} // namespace cpmu

#endif // CPMU_MOBIUS_HPP
