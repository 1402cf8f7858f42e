#include "cpmu/error.hpp"
#include "cpmu/generate.hpp"
#include "cpmu/interval.hpp"
#include "cpmu/mobius.hpp"
#include "cpmu/screen.hpp"

#include <gtest/gtest.h>

namespace cpmu {
namespace {

Permutation P(const char *text) { return Permutation::parse(text); }

TEST(Screen, LongTailForcesZero) {
  const auto r = screen(P("123"), P("68513427"));
  EXPECT_TRUE(r.forces_zero);
  EXPECT_FALSE(r.tail_sum);
  EXPECT_EQ(r.tails, (TailProfile{3, 2}));

  // 231 sits at positions 2 and 6 here, so the right tail has length 2.
  const auto s = screen(P("231"), P("2,5,7,1,4,8,9,3,6,10"));
  EXPECT_EQ(s.tails, (TailProfile{1, 2}));
  EXPECT_TRUE(s.forces_zero);
  EXPECT_FALSE(s.tail_sum);
}

TEST(Screen, SigmaIsTheSocle) {
  const auto r = screen(P("321"), P("431825976"));
  EXPECT_EQ(r.tail_sum, 0);
  EXPECT_FALSE(r.forces_zero);
  // No monotone bifix of length 4, so -1 is ruled out; mu is 1.
  EXPECT_EQ(r.excluded_value, -1);
  EXPECT_EQ(r.omega, P("321"));
  EXPECT_EQ(mobius_fast(P("321"), P("431825976")).value, 1);
}

TEST(Screen, TailSumTwoExcludesMinusOne) {
  const auto r = screen(P("21"), P("132546"));
  EXPECT_EQ(r.tails, (TailProfile{1, 1}));
  EXPECT_EQ(r.tail_sum, 2);
  EXPECT_EQ(r.excluded_value, -1);
  EXPECT_FALSE(r.forces_zero);
  EXPECT_EQ(mobius_oracle(P("21"), P("132546")), 1);
}

TEST(Screen, TailSumOne) {
  const auto r = screen(P("12"), P("13254"));
  EXPECT_EQ(r.tail_sum, 1);
  EXPECT_EQ(r.excluded_value, 1);
  EXPECT_EQ(mobius_oracle(P("12"), P("13254")), -1);
}

TEST(Screen, OmegaAlphaBetaForcesZero) {
  const auto r = screen(P("12"), P("1235467"));
  EXPECT_EQ(r.tail_sum, 0);
  EXPECT_EQ(r.omega, P("123"));
  EXPECT_EQ(r.alpha, P("1234"));
  // 123 occurs at positions 1, 2 and 5; beta starts at position 2.
  EXPECT_EQ(r.beta, P("124356"));
  // 123 is itself a monotone bifix, so the parity rule excludes nothing.
  EXPECT_FALSE(r.excluded_value);
  EXPECT_TRUE(r.forces_zero);
  EXPECT_EQ(mobius_oracle(P("12"), P("1235467")), 0);
}

TEST(Screen, NotContainedThrows) {
  EXPECT_THROW(screen(P("231"), P("253641")), NotContained);
}

TEST(Screen, NeverContradictsTheComputedValue) {
  Rng rng(67);
  int forced = 0;
  int excluded = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    auto [sigma, tau] = random_pair(trial % 2 ? 11 : 24, rng);
    const auto r = screen(sigma, tau);
    const int mu = mobius_fast(sigma, tau).value;
    if (r.excluded_value) {
      ++excluded;
      EXPECT_EQ(*r.excluded_value, r.tail_sum.value() % 2 == 0 ? -1 : 1);
      EXPECT_NE(*r.excluded_value, mu) << sigma << " " << tau;
    }
    if (r.forces_zero) {
      ++forced;
      EXPECT_EQ(mu, 0) << sigma << " " << tau;
    }
  }
  EXPECT_GT(forced, 0);
  EXPECT_GT(excluded, 0);
}

} // namespace
} // namespace cpmu
