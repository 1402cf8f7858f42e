#include "cpmu/mobius.hpp"

#include "cpmu/error.hpp"

#include <array>
#include <utility>
#include <variant>

namespace cpmu {

namespace {

constexpr std::array<std::pair<MobiusCase, std::string_view>, 8> kCaseNames{{
    {MobiusCase::NotContained, "not-contained"},
    {MobiusCase::Equal, "equal"},
    {MobiusCase::SmallRank, "small-rank"},
    {MobiusCase::OneOccurrence, "one-occurrence"},
    {MobiusCase::InteriorAbsent, "interior-absent"},
    {MobiusCase::LongTail, "long-tail"},
    {MobiusCase::NoCarrier, "no-carrier"},
    {MobiusCase::ViaSocle, "via-socle"},
}};

int small_rank_value(std::size_t rank, const Permutation &tau) {
  switch (rank) {
  case 0:
    return 1;
  case 1:
    return -1;
  default:
    return is_monotone(tau) ? 0 : 1;
  }
}

// The descending scan. Preconditions are the caller's job.
CarrierSearchReport scan_for_carrier(const Permutation &sigma,
                                     const Permutation &tau,
                                     const Permutation &interior,
                                     const CarrierSearchOptions &opts) {
  CarrierSearchReport report;
  const auto n = tau.size();
  const auto k = sigma.size();

  auto outside_interior = [&](const Permutation &candidate) {
    if (candidate.size() == interior.size())
      return candidate != interior;
    return !contains(interior, candidate);
  };

  for (std::size_t len = n - 2; len >= k; --len) {
    if (!is_bifix(tau, len))
      continue;
    auto candidate = affix_pattern(tau, len, Side::Left);
    if (!contains(candidate, sigma) || !outside_interior(candidate))
      continue;
    if (!report.carrier) {
      report.carrier = std::move(candidate);
      if (!opts.verify_uniqueness)
        break;
    } else {
      throw CarrierNotUnique("carriers " + report.carrier->str() + " and " +
                             candidate.str() + " both accepted for [" +
                             sigma.str() + ", " + tau.str() + "]");
    }
  }

  if (opts.collect_chains) {
    for (std::size_t len = k; len + 2 <= n; ++len) {
      for (auto side : {Side::Left, Side::Right}) {
        auto p = affix_pattern(tau, len, side);
        if (contains(p, sigma) && outside_interior(p))
          (side == Side::Left ? report.prefix_chain : report.suffix_chain)
              .push_back(std::move(p));
      }
    }
  }
  return report;
}

// Either a decided result or the carrier to recurse into.
using Step = std::variant<MobiusResult, Permutation>;

Step dispatch(const Permutation &sigma, const Permutation &tau,
              const FastOptions &opts) {
  if (sigma == tau)
    return MobiusResult{1, MobiusCase::Equal, {}};
  const auto starts = occurrences(sigma, tau);
  if (starts.empty())
    return MobiusResult{0, MobiusCase::NotContained, {}};

  const auto n = tau.size();
  const auto k = sigma.size();
  const TailProfile tp{starts.front() - 1, n - (starts.back() + k - 1)};

  if (starts.size() == 1)
    return MobiusResult{mobius_one_occurrence(tp), MobiusCase::OneOccurrence, {}};
  if (n - k <= 2)
    return MobiusResult{small_rank_value(n - k, tau), MobiusCase::SmallRank, {}};
  if (!opts.trace_carriers && (tp.left >= 2 || tp.right >= 2))
    return MobiusResult{0, MobiusCase::LongTail, {}};

  const auto interior = trim(tau, true, true);
  if (!contains(interior, sigma))
    return MobiusResult{1, MobiusCase::InteriorAbsent, {sigma}};

  auto report = scan_for_carrier(sigma, tau, interior,
                                 {.verify_uniqueness = opts.verify_uniqueness});
  if (!report.carrier)
    return MobiusResult{0, MobiusCase::NoCarrier, {}};
  return std::move(*report.carrier);
}

} // namespace

std::string_view to_string(MobiusCase c) {
  for (const auto &[value, name] : kCaseNames) {
    if (value == c)
      return name;
  }
  return "unknown";
}

std::optional<MobiusCase> parse_mobius_case(std::string_view s) {
  for (const auto &[value, name] : kCaseNames) {
    if (name == s)
      return value;
  }
  return std::nullopt;
}

MobiusResult mobius_fast(const Permutation &sigma, const Permutation &tau,
                         const FastOptions &opts) {
  std::vector<Permutation> chain;
  Permutation top = tau;
  for (;;) {
    auto step = dispatch(sigma, top, opts);
    if (auto *done = std::get_if<MobiusResult>(&step)) {
      if (chain.empty())
        return std::move(*done);
      chain.insert(chain.end(), done->carrier_chain.begin(),
                   done->carrier_chain.end());
      return MobiusResult{done->value, MobiusCase::ViaSocle, std::move(chain)};
    }
    top = std::get<Permutation>(std::move(step));
    chain.push_back(top);
  }
}

int mobius_small_rank(const Permutation &sigma, const Permutation &tau) {
  if (tau.size() < sigma.size() || tau.size() - sigma.size() > 2)
    throw InvalidInput("small-rank rule needs |tau| - |sigma| in 0..2");
  const auto count = occurrences(sigma, tau).size();
  if (count == 0)
    throw NotContained(sigma.str() + " does not occur in " + tau.str());
  const auto rank = tau.size() - sigma.size();
  if (rank == 2 && count < 2)
    throw InvalidInput("rank-2 rule needs at least two occurrences of sigma");
  return small_rank_value(rank, tau);
}

int mobius_one_occurrence(const TailProfile &tp) {
  if (tp.left == tp.right && tp.left <= 1)
    return 1;
  if (tp.left + tp.right == 1)
    return -1;
  return 0;
}

CarrierSearchReport find_carrier(const Permutation &sigma,
                                 const Permutation &tau,
                                 const CarrierSearchOptions &opts) {
  if (tau.size() < sigma.size() + 3)
    throw InvalidInput("carrier search needs |tau| - |sigma| >= 3");
  if (!contains(tau, sigma))
    throw InvalidInput("carrier search needs " + sigma.str() + " to occur in " +
                       tau.str());
  return scan_for_carrier(sigma, tau, trim(tau, true, true), opts);
}

std::vector<Permutation> socle_chain(const Permutation &sigma,
                                     const Permutation &tau) {
  return mobius_fast(sigma, tau, {.trace_carriers = true}).carrier_chain;
}

} // namespace cpmu
