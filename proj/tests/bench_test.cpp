#include "cpmu/bench.hpp"
#include "cpmu/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace cpmu {
namespace {

TEST(Slope, RecoversExactPowerLaws) {
  const std::vector<double> xs{10, 20, 40, 80};
  std::vector<double> cubic, square;
  for (double x : xs) {
    cubic.push_back(0.5 * x * x * x);
    square.push_back(3 * x * x);
  }
  EXPECT_NEAR(fit_loglog_slope(xs, cubic), 3.0, 1e-12);
  EXPECT_NEAR(fit_loglog_slope(xs, square), 2.0, 1e-12);
}

TEST(Slope, RejectsDegenerateInput) {
  const std::vector<double> one{1};
  EXPECT_THROW(fit_loglog_slope(one, one), InvalidInput);
  const std::vector<double> same{5, 5};
  const std::vector<double> ys{1, 2};
  EXPECT_THROW(fit_loglog_slope(same, ys), InvalidInput);
  const std::vector<double> xs{1, 2};
  const std::vector<double> zero{0, 1};
  EXPECT_THROW(fit_loglog_slope(xs, zero), InvalidInput);
}

TEST(Bench, WorstCaseRowsRunTheFullScan) {
  const auto report = run_benchmark({.sizes = {40, 80}, .min_seconds = 0.001});
  ASSERT_EQ(report.rows.size(), 2u);
  for (const auto &row : report.rows) {
    EXPECT_EQ(row.decided_by, MobiusCase::NoCarrier);
    EXPECT_EQ(row.value, 0);
    EXPECT_GT(row.seconds, 0);
    EXPECT_GE(row.repetitions, 1u);
  }
  EXPECT_TRUE(report.slope);
}

TEST(Bench, LongTailInstances) {
  const auto report = run_benchmark({.sizes = {100},
                                     .instance = BenchInstance::LongTail,
                                     .min_seconds = 0.001});
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].decided_by, MobiusCase::LongTail);
  EXPECT_FALSE(report.slope);
}

TEST(Bench, NeedsSizes) {
  EXPECT_THROW(run_benchmark({}), InvalidInput);
}

} // namespace
} // namespace cpmu
