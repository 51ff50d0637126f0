#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "fnls/error.hpp"
#include "fnls/random.hpp"
#include "fnls/statistics.hpp"

namespace fnls {
namespace {

using C = Philox4x32::Counter;
using K = Philox4x32::Key;

// Known-answer vectors of the reference Random123 distribution.
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0}),
            (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                 K{0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                 K{0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(KeyedNormals, DeterministicAndDistinct) {
  EXPECT_EQ(keyed_normal_pair(5, 7, -3), keyed_normal_pair(5, 7, -3));
  std::set<double> seen;
  for (std::int64_t mode = -20; mode <= 20; ++mode) {
    seen.insert(keyed_normal_pair(5, 7, mode).first);
    seen.insert(keyed_normal_pair(6, 7, mode).first);
    seen.insert(keyed_normal_pair(5, 8, mode).first);
  }
  EXPECT_EQ(seen.size(), 123u);
}

TEST(KeyedNormals, Moments) {
  const int M = 200000;
  double s1 = 0, s2 = 0, cross = 0, s4 = 0;
  for (int k = 0; k < M; ++k) {
    const auto [a, b] = keyed_normal_pair(99, static_cast<std::uint64_t>(k), k % 7 - 3);
    s1 += a + b;
    s2 += a * a + b * b;
    s4 += a * a * a * a;
    cross += a * b;
  }
  EXPECT_NEAR(s1 / (2 * M), 0.0, 4.0 / std::sqrt(2.0 * M));
  EXPECT_NEAR(s2 / (2 * M), 1.0, 4.0 * std::sqrt(2.0 / (2 * M)));
  EXPECT_NEAR(s4 / M, 3.0, 4.0 * std::sqrt(96.0 / M));
  EXPECT_NEAR(cross / M, 0.0, 4.0 / std::sqrt(M));
}

TEST(MeanEstimate, Values) {
  const std::vector<double> x{1, 2, 3, 4};
  const auto e = mean_estimate(x);
  EXPECT_DOUBLE_EQ(e.value, 2.5);
  EXPECT_NEAR(e.std_error, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  EXPECT_THROW(mean_estimate(std::vector<double>{}), DegenerateEstimator);
}

TEST(WeightedPowerMean, ValuesAndErrors) {
  const std::vector<double> x{1, 2, 3};
  EXPECT_NEAR(weighted_power_mean(x, {}, 2).value, std::sqrt(14.0 / 3.0), 1e-14);
  const std::vector<double> w{0, 1, 1};
  EXPECT_NEAR(weighted_power_mean(x, w, 1).value, 2.5, 1e-14);
  EXPECT_THROW(weighted_power_mean(x, std::vector<double>{0, 0, 0}, 2), DegenerateEstimator);
  EXPECT_THROW(weighted_power_mean(std::vector<double>{}, {}, 2), DegenerateEstimator);
  const std::vector<double> constant(50, 4.0);
  const auto e = weighted_power_mean(constant, {}, 8);
  EXPECT_NEAR(e.value, 4.0, 1e-14);
  EXPECT_NEAR(e.std_error, 0.0, 1e-12);
}

TEST(WeightedPowerMean, LargePowersStayFinite) {
  const std::vector<double> x{1e3, 2e3, 5e2};
  const auto e = weighted_power_mean(x, {}, 200);
  EXPECT_TRUE(std::isfinite(e.value));
  EXPECT_NEAR(e.value, 2e3 * std::pow((1.0 + std::pow(0.5, 200) + std::pow(0.25, 200)) / 3.0, 1.0 / 200),
              1e-9);
}

TEST(WeightedPowerMean, JackknifeMatchesMeanStandardError) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> g(5.0, 1.0);
  std::vector<double> x(400);
  for (auto& v : x) v = g(gen);
  EXPECT_NEAR(weighted_power_mean(x, {}, 1).std_error, mean_estimate(x).std_error, 1e-12);
}

TEST(Intervals, Overlap) {
  EXPECT_TRUE(intervals_overlap({1.0, 0.1}, {1.3, 0.1}));
  EXPECT_FALSE(intervals_overlap({1.0, 0.01}, {1.3, 0.01}));
}

TEST(KolmogorovSmirnov, Values) {
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 2, 3}, {3, 1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 2}, {3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(ks_two_sample({1, 2, 3, 4}, {3, 4, 5, 6}), 0.5);
  EXPECT_NEAR(ks_critical_value(100, 100, 0.01), std::sqrt(-std::log(0.005) / 2.0) * std::sqrt(0.02),
              1e-15);
}

TEST(KolmogorovSmirnov, SameLawBelowCriticalValue) {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> g;
  std::vector<double> a(5000), b(5000);
  for (auto& v : a) v = g(gen);
  for (auto& v : b) v = g(gen);
  EXPECT_LT(ks_two_sample(a, b), ks_critical_value(a.size(), b.size(), 0.01));
  for (auto& v : b) v += 0.2;
  EXPECT_GT(ks_two_sample(a, b), ks_critical_value(a.size(), b.size(), 0.01));
}

TEST(LeastSquares, ExactLine) {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, 3, 5, 7};
  const auto fit = least_squares(x, y);
  EXPECT_NEAR(fit.slope, 2.0, 1e-14);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-14);
}

}  // namespace
}  // namespace fnls
