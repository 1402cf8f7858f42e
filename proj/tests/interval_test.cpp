#include "cpmu/error.hpp"
#include "cpmu/generate.hpp"
#include "cpmu/interval.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace cpmu {
namespace {

Permutation P(const char *text) { return Permutation::parse(text); }

std::set<Permutation> element_set(const Interval &iv) {
  return {iv.elements().begin(), iv.elements().end()};
}

TEST(CoveredBy, Examples) {
  EXPECT_EQ(covered_by(P("68513427")),
            (std::set<Permutation>{P("7513426"), P("6751342")}));
  EXPECT_EQ(covered_by(P("1234")), (std::set<Permutation>{P("123")}));
  EXPECT_EQ(covered_by(P("21")), (std::set<Permutation>{P("1")}));
  EXPECT_THROW(covered_by(P("1")), InvalidInput);
}

TEST(CoveredBy, SingletonExactlyForMonotone) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_permutation(2 + rng() % 7, rng);
    EXPECT_EQ(covered_by(t).size() == 1, is_monotone(t)) << t;
  }
}

TEST(BuildInterval, GridExample) {
  const auto iv = build_interval(P("123"), P("68513427"));
  const std::set<Permutation> drawn{
      P("68513427"), P("7513426"), P("6751342"), P("513426"),
      P("651342"),   P("564123"),  P("13425"),   P("51342"),
      P("54123"),    P("1342"),    P("4123"),    P("123")};
  EXPECT_EQ(element_set(iv), drawn);
  EXPECT_EQ(iv.rank(), 5u);
  EXPECT_EQ(iv.sigma(), P("123"));
  EXPECT_EQ(iv.tau(), P("68513427"));
}

TEST(BuildInterval, SmallCases) {
  const auto single = build_interval(P("2413"), P("2413"));
  EXPECT_EQ(single.size(), 1u);
  const auto chain = build_interval(P("12"), P("1234"));
  EXPECT_EQ(element_set(chain),
            (std::set<Permutation>{P("12"), P("123"), P("1234")}));
  EXPECT_THROW(build_interval(P("231"), P("253641")), NotContained);
}

TEST(BuildInterval, OrderMatchesPairwiseContainment) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto [sigma, tau] = random_pair(9, rng);
    const auto iv = build_interval(sigma, tau);
    for (std::size_t i = 0; i < iv.size(); ++i) {
      EXPECT_TRUE(contains(iv[i], sigma));
      EXPECT_TRUE(contains(tau, iv[i]));
      for (std::size_t j = 0; j < iv.size(); ++j)
        EXPECT_EQ(iv.leq(i, j), contains(iv[j], iv[i]))
            << iv[i] << " vs " << iv[j];
    }
    // The interior is an element exactly when sigma occurs in it.
    if (tau.size() >= 3)
      EXPECT_EQ(iv.contains(trim(tau, true, true)),
                contains(trim(tau, true, true), sigma));
  }
}

TEST(BuildInterval, SingleOccurrenceGivesGrid) {
  Rng rng(23);
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      const auto sigma = P("2413");
      const auto tau = single_occurrence_tau(sigma, a, b, rng);
      EXPECT_EQ(build_interval(sigma, tau).size(), (a + 1) * (b + 1)) << tau;
    }
  }
}

// Covers recomputed from the order relation alone.
std::set<std::pair<std::size_t, std::size_t>> covers_by_filtering(
    const Interval &iv) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    for (std::size_t j = 0; j < iv.size(); ++j) {
      if (i == j || !iv.leq(i, j))
        continue;
      bool between = false;
      for (std::size_t w = 0; w < iv.size() && !between; ++w)
        between = w != i && w != j && iv.leq(i, w) && iv.leq(w, j);
      if (!between)
        out.emplace(i, j);
    }
  }
  return out;
}

TEST(HasseEdges, Examples) {
  EXPECT_TRUE(hasse_edges(build_interval(P("12"), P("12"))).edges.empty());
  const auto chain = hasse_edges(build_interval(P("12"), P("1234")));
  EXPECT_EQ(chain.edges.size(), 2u);
  // A 4x3 grid has 4*2 + 3*3 cover edges.
  EXPECT_EQ(hasse_edges(build_interval(P("123"), P("68513427"))).edges.size(),
            17u);
}

TEST(HasseEdges, EndDeletionAgreesWithRelationFiltering) {
  Rng rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    auto [sigma, tau] = random_pair(9, rng);
    const auto iv = build_interval(sigma, tau);
    const auto h = hasse_edges(iv);
    std::set<std::pair<std::size_t, std::size_t>> got(h.edges.begin(),
                                                      h.edges.end());
    EXPECT_EQ(got, covers_by_filtering(iv)) << sigma << " " << tau;
    std::vector<int> in(iv.size()), out(iv.size());
    for (auto [lo, hi] : h.edges) {
      ++out[lo];
      ++in[hi];
    }
    for (std::size_t i = 0; i < iv.size(); ++i) {
      if (i != 0)
        EXPECT_GE(in[i], 1);
      if (i + 1 != iv.size())
        EXPECT_GE(out[i], 1);
      EXPECT_LE(in[i], 2); // each permutation covers at most two others
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(mobius_oracle(P("123"), P("68513427")), 0);
  EXPECT_EQ(mobius_oracle(P("2413"), P("2413")), 1);
  EXPECT_EQ(mobius_oracle(P("321"), P("431825976")), 1);
  EXPECT_EQ(mobius_oracle(P("12"), P("1324")), 1); // Boolean algebra B2
  EXPECT_EQ(mobius_oracle(P("12"), P("123")), -1);
  EXPECT_EQ(mobius_oracle(P("231"), P("253641")), 0);

  EXPECT_EQ(mobius_oracle_topdown(P("123"), P("68513427")), 0);
  EXPECT_EQ(mobius_oracle_topdown(P("2413"), P("2413")), 1);
  EXPECT_EQ(mobius_oracle_topdown(P("231"), P("245136")), 0);
}

TEST(Oracle, SizeGuard) {
  const auto big = Permutation::identity(61);
  EXPECT_THROW(mobius_oracle(P("1"), big), OracleTooLarge);
  EXPECT_THROW(mobius_oracle_topdown(P("1"), big), OracleTooLarge);
  EXPECT_EQ(mobius_oracle(P("12"), Permutation::identity(20), {.max_length = 20}),
            0);
}

TEST(Oracle, BothRoutesAgreeAndSumToZero) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto [sigma, tau] = random_pair(10, rng);
    const auto iv = build_interval(sigma, tau);
    const auto up = mobius_from_bottom(iv);
    const auto down = mobius_to_top(iv);
    EXPECT_EQ(up.back(), down.front()) << sigma << " " << tau;
    if (sigma != tau)
      EXPECT_EQ(std::accumulate(up.begin(), up.end(), 0), 0);
  }
}

} // namespace
} // namespace cpmu
