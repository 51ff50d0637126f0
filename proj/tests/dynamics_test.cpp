#include <cmath>

#include "gtest/gtest.h"
#include "fnls/cubic.hpp"
#include "fnls/dynamics.hpp"
#include "fnls/error.hpp"
#include "fnls/measure.hpp"
#include "fnls/norms.hpp"
#include "fnls/phase.hpp"
#include "oracles.hpp"

namespace fnls {
namespace {

SimParams params(int N, double dt, double horizon = 1.0, double alpha = 1.0) {
  SimParams p;
  p.N = N;
  p.dt = dt;
  p.horizon = horizon;
  p.alpha = alpha;
  return p;
}

TEST(SimParams, Validation) {
  SimParams p;
  EXPECT_NO_THROW(p.validate());
  auto bad = p;
  bad.eps = 0.3;
  EXPECT_THROW(bad.validate(), InvalidParameter);
  bad = p;
  bad.N = 0;
  EXPECT_THROW(bad.validate(), InvalidParameter);
  bad = p;
  bad.dt = 2.0;
  EXPECT_THROW(bad.validate(), InvalidParameter);
  bad = p;
  bad.sign = 2;
  EXPECT_THROW(bad.validate(), InvalidParameter);
  EXPECT_DOUBLE_EQ(p.sigma(), 0.4);
}

TEST(LinearPropagator, Examples) {
  const auto f = oracle::random_field(5, 1);
  EXPECT_EQ(linear_propagator(f, 0.0, 1.3), f);
  const auto g = linear_propagator(f, 2.7, 1.3);
  EXPECT_EQ(g[0], f[0]);
  EXPECT_NEAR(std::abs(g[3] - f[3] * std::polar(1.0, 2.7 * std::pow(3.0, 2.6))), 0.0, 1e-14);
  EXPECT_NEAR(sobolev_norm(g, SobolevIndex{0.7}), sobolev_norm(f, SobolevIndex{0.7}), 1e-13);
}

TEST(Gauge, Examples) {
  const auto f = SpectralField::single_mode(2, 0, 1.0);
  const double t = 0.37;
  EXPECT_NEAR(std::abs(gauge_forward(f, t)[0] - std::polar(1.0, 2.0 * t)), 0.0, 1e-15);
  const auto g = oracle::random_field(4, 2);
  EXPECT_LT(max_abs_difference(gauge_inverse(gauge_forward(g, 1.1), 1.1), g), 1e-13);
}

TEST(RhsGauged, Examples) {
  const auto p = params(3, 1e-2);
  EXPECT_TRUE(rhs_gauged(SpectralField(3), p).is_zero());
  const Complex c{0.4, -0.9};
  const auto out = rhs_gauged(SpectralField::single_mode(3, 2, c), p);
  const Complex expected = Complex{0.0, 1.0} * (4.0 + std::norm(c)) * c;
  EXPECT_NEAR(std::abs(out[2] - expected), 0.0, 1e-14);
  EXPECT_THROW(rhs_gauged(SpectralField(4), p), InvalidParameter);
}

TEST(RhsInteraction, Examples) {
  const auto p = params(3, 1e-2);
  EXPECT_TRUE(rhs_interaction(SpectralField(3), 0.5, p).is_zero());
  const Complex c{1.2, 0.3};
  const auto out = rhs_interaction(SpectralField::single_mode(3, -1, c), 0.5, p);
  EXPECT_NEAR(std::abs(out[-1] - Complex{0.0, 1.0} * std::norm(c) * c), 0.0, 1e-14);
}

TEST(RhsInteraction, AgreesWithLabFrame) {
  // d/dt S(-t) v = S(-t) (v' - i|D|^{2a} v), the nonlinear part pulled back.
  for (double alpha : {1.0, 1.7}) {
    auto p = params(4, 1e-2, 1.0, alpha);
    for (int sign : {1, -1}) {
      p.sign = sign;
      const auto w = oracle::random_field(4, 40 + sign);
      const double t = 0.83;
      const auto v = linear_propagator(w, t, alpha);
      SpectralField lab = rhs_gauged(v, p);
      for (int k = -4; k <= 4; ++k) lab[k] -= Complex{0.0, 1.0} * dispersion(k, alpha) * v[k];
      const auto pulled = linear_propagator(lab, -t, alpha);
      EXPECT_LT(max_abs_difference(pulled, rhs_interaction(w, t, p)), 1e-10);
    }
  }
}

TEST(Flow, SingleModeClosedForm) {
  const Complex c{0.6, 0.5};
  for (double alpha : {1.0, 0.8, 2.0}) {
    const auto p = params(4, 1e-3, 1.0, alpha);
    const auto v = flow(SpectralField::single_mode(4, 3, c), p, 1.0);
    const Complex expected = c * std::polar(1.0, std::pow(3.0, 2 * alpha) + std::norm(c));
    EXPECT_LT(std::abs(v[3] - expected), 1e-9) << alpha;
  }
}

TEST(Flow, LinearOnlyIsExact) {
  auto p = params(5, 1e-2);
  p.sign = 0;
  const auto f = oracle::random_field(5, 8);
  EXPECT_LT(max_abs_difference(flow(f, p, 0.9), linear_propagator(f, 0.9, 1.0)), 1e-12);
  const auto tr = evolve(f, p);
  const auto report = conservation_report(tr, p);
  EXPECT_LE(report.mass_drift, 1e-13);
  EXPECT_LE(report.energy_drift, 1e-13);
}

TEST(Flow, HighModesRotateLinearly) {
  const auto p = params(4, 1e-2);
  const auto f = oracle::random_field(9, 17);
  const auto v = flow(f, p, 1.0);
  const auto lin = linear_propagator(f, 1.0, 1.0);
  for (int k = 5; k <= 9; ++k) {
    EXPECT_LT(std::abs(v[k] - lin[k]), 1e-12);
    EXPECT_LT(std::abs(v[-k] - lin[-k]), 1e-12);
  }
  EXPECT_LT(max_abs_difference(v.projected(4), flow(f.resized(4), p, 1.0).resized(9)), 1e-13);
}

TEST(Flow, TimeReversible) {
  const auto p = params(16, 1e-3);
  const auto f = 0.5 * oracle::random_field(16, 4, 1.0);
  EXPECT_LT(max_abs_difference(flow(flow(f, p, 1.0), p, -1.0), f), 1e-7);
}

TEST(Flow, FourthOrderSelfConvergence) {
  const auto f = oracle::random_field(8, 23, 0.5);
  const auto ref = flow(f, params(8, 1e-3 / 8), 1.0);
  const double e1 = max_abs_difference(flow(f, params(8, 1e-2), 1.0), ref);
  const double e2 = max_abs_difference(flow(f, params(8, 5e-3), 1.0), ref);
  EXPECT_NEAR(e1 / e2, 16.0, 0.2 * 16.0);
}

TEST(Flow, Conservation) {
  // Smooth random data: one mu_2 sample.
  auto p = params(16, 1e-3);
  p.s = 2.0;
  const auto f = sample_mu(p, 1, 0);
  const auto fine = conservation_report(evolve(f, p, 100), p);
  EXPECT_LE(fine.mass_drift, 1e-8);
  EXPECT_LE(fine.energy_drift, 1e-8);
  p.dt = 2e-3;
  const auto coarse = conservation_report(evolve(f, p, 50), p);
  const double order = std::log2(coarse.energy_drift / fine.energy_drift);
  EXPECT_GT(order, 3.5);
  EXPECT_LT(order, 5.5);
}

TEST(Flow, SingleModeMassDrift) {
  const auto p = params(4, 1e-3);
  const auto tr = evolve(SpectralField::single_mode(4, 1, Complex{0.3, 1.1}), p);
  EXPECT_LE(conservation_report(tr, p).mass_drift, 1e-12);
}

TEST(Flow, GaugeEquivalence) {
  for (int sign : {1, -1}) {
    auto p = params(16, 1e-3);
    p.sign = sign;
    const auto f = 0.5 * oracle::random_field(16, 90, 1.0);
    const auto v = flow(f, p, 1.0);
    const auto u = flow_ungauged(f, p, 1.0);
    EXPECT_LT(max_abs_difference(gauge_forward(u, sign * 1.0), v), 1e-8) << sign;
  }
}

TEST(Evolve, RecordsRequestedStates) {
  const auto p = params(3, 0.1);
  const auto tr = evolve(oracle::random_field(3, 1), p, 3);
  const std::vector<double> expected{0.0, 0.3, 0.6, 0.9, 1.0};
  ASSERT_EQ(tr.times.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(tr.times[k], expected[k], 1e-14);
  EXPECT_EQ(tr.states.size(), tr.times.size());
  EXPECT_THROW(evolve(oracle::random_field(3, 1), p, 0), InvalidParameter);
}

TEST(Flow, BlowupIsReported) {
  auto p = params(4, 0.1);
  p.sign = -1;
  const auto f = 1e3 * oracle::random_field(4, 3);
  try {
    flow(f, p, 1.0);
    FAIL() << "expected blowup";
  } catch (const BlowupDetected& e) {
    EXPECT_GT(e.time(), 0.0);
    EXPECT_LE(e.time(), 1.0);
  }
}

TEST(SuggestedDt, Examples) {
  EXPECT_DOUBLE_EQ(suggested_dt(SpectralField(2)), 1e-2);
  EXPECT_DOUBLE_EQ(suggested_dt(SpectralField::single_mode(2, 1, 3.0)), 1e-2);
  EXPECT_NEAR(suggested_dt(SpectralField::single_mode(2, 1, std::sqrt(99.0))), 1e-3, 1e-18);
}

}  // namespace
}  // namespace fnls
