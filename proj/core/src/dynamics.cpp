#include "fnls/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/error.hpp"
#include "fnls/lattice.hpp"
#include "fnls/norms.hpp"
#include "fnls/phase.hpp"

namespace fnls {
namespace {

constexpr double kBlowupThreshold = 1e12;
constexpr Complex kI{0.0, 1.0};

void check_finite_state(const SpectralField& v, double time) {
  for (const auto& c : v.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) ||
        std::abs(c) > kBlowupThreshold) {
      throw BlowupDetected(time, "blowup detected at t = " + std::to_string(time));
    }
  }
}

int step_count(double t, double dt) {
  const double ratio = std::abs(t) / dt;
  return std::max(1, static_cast<int>(std::ceil(ratio - 1e-9)));
}

SpectralField integrate(const SpectralField& f0, const SimParams& p, double t,
                        LawsonStepper::Nonlinearity kind) {
  p.validate();
  if (f0.cutoff() < p.N) throw InvalidParameter("flow: field cutoff below N");
  if (t == 0.0) return f0;
  const int steps = step_count(t, p.dt);
  const double h = t / steps;
  LawsonStepper stepper(f0.cutoff(), p, kind);
  SpectralField v = f0;
  for (int k = 1; k <= steps; ++k) {
    stepper.step(v, h);
    check_finite_state(v, k * h);
  }
  return v;
}

}  // namespace

void SimParams::validate() const {
  if (!(alpha > 0.0)) throw InvalidParameter("alpha must be positive");
  if (!(eps > 0.0 && eps <= 0.25)) throw InvalidParameter("eps must lie in (0, 1/4]");
  if (N < 1) throw InvalidParameter("N must be >= 1");
  if (sign < -1 || sign > 1) throw InvalidParameter("sign must be -1, 0 or +1");
  if (!(dt > 0.0)) throw InvalidParameter("dt must be positive");
  if (!(horizon > 0.0)) throw InvalidParameter("horizon must be positive");
  if (dt > horizon) throw InvalidParameter("dt must not exceed the horizon");
  if (!std::isfinite(s)) throw InvalidParameter("s must be finite");
}

SpectralField linear_propagator(const SpectralField& f, double t, double alpha) {
  SpectralField out = f;
  const int n = f.cutoff();
  for (int k = -n; k <= n; ++k) {
    out[k] *= std::polar(1.0, t * dispersion(k, alpha));
  }
  return out;
}

SpectralField gauge_forward(const SpectralField& f, double t) {
  return f * std::polar(1.0, 2.0 * t * mass(f));
}

SpectralField gauge_inverse(const SpectralField& f, double t) {
  return gauge_forward(f, -t);
}

SpectralField rhs_gauged(const SpectralField& f, const SimParams& p) {
  if (f.cutoff() != p.N) throw InvalidParameter("rhs_gauged: cutoff mismatch");
  SpectralField out = cubic_term(f, p.N);
  out *= Complex{0.0, -static_cast<double>(p.sign)};
  for (int k = -p.N; k <= p.N; ++k) out[k] += kI * dispersion(k, p.alpha) * f[k];
  return out;
}

SpectralField rhs_interaction(const SpectralField& w, double t,
                              const SimParams& p) {
  if (w.cutoff() != p.N) throw InvalidParameter("rhs_interaction: cutoff mismatch");
  const WeightTable table(p.N, p.alpha, 1.0);
  SpectralField out(p.N);
  for (int n = -p.N; n <= p.N; ++n) {
    Complex sum{};
    for_each_in_hyperplane(n, p.N, [&](int n1, int n2, int n3) {
      const double phi = table.phase(n1, n2, n3, n);
      sum += std::polar(1.0, t * phi) * w[n1] * std::conj(w[n2]) * w[n3];
    });
    out[n] = static_cast<double>(p.sign) * (-kI * sum + kI * std::norm(w[n]) * w[n]);
  }
  return out;
}

LawsonStepper::LawsonStepper(int field_cutoff, const SimParams& p,
                             Nonlinearity kind)
    : cutoff_(field_cutoff), params_(p), kind_(kind), cubic_(p.N) {
  const auto width = static_cast<std::size_t>(2 * field_cutoff + 1);
  omega_.resize(width);
  for (int k = -field_cutoff; k <= field_cutoff; ++k) {
    omega_[static_cast<std::size_t>(k + field_cutoff)] = dispersion(k, p.alpha);
  }
  half_.resize(width);
  full_.resize(width);
  const auto inner = static_cast<std::size_t>(2 * p.N + 1);
  k1_.resize(inner);
  k2_.resize(inner);
  k3_.resize(inner);
  k4_.resize(inner);
  stage_.resize(inner);
}

void LawsonStepper::set_step(double h) {
  if (h == cached_h_) return;
  for (std::size_t k = 0; k < omega_.size(); ++k) {
    half_[k] = std::polar(1.0, 0.5 * h * omega_[k]);
    full_[k] = std::polar(1.0, h * omega_[k]);
  }
  cached_h_ = h;
}

void LawsonStepper::nonlinear(std::span<const Complex> v, std::span<Complex> out) {
  if (kind_ == Nonlinearity::gauged) {
    cubic_.gauged(v, out);
  } else {
    cubic_.ungauged(v, out);
  }
  const Complex factor{0.0, -static_cast<double>(params_.sign)};
  for (auto& c : out) c *= factor;
}

void LawsonStepper::step(SpectralField& v, double h) {
  if (v.cutoff() != cutoff_) throw InvalidParameter("LawsonStepper: cutoff mismatch");
  set_step(h);
  const int n = params_.N;
  const auto offset = static_cast<std::size_t>(cutoff_ - n);
  const auto inner = k1_.size();
  auto state = v.coeffs();
  auto low = state.subspan(offset, inner);

  if (params_.sign == 0) {
    for (std::size_t k = 0; k < state.size(); ++k) state[k] *= full_[k];
    return;
  }

  auto half = [&](std::size_t j) { return half_[offset + j]; };
  auto full = [&](std::size_t j) { return full_[offset + j]; };

  nonlinear(low, k1_);
  for (std::size_t j = 0; j < inner; ++j) {
    stage_[j] = half(j) * (low[j] + 0.5 * h * k1_[j]);
  }
  nonlinear(stage_, k2_);
  for (std::size_t j = 0; j < inner; ++j) {
    stage_[j] = half(j) * low[j] + 0.5 * h * k2_[j];
  }
  nonlinear(stage_, k3_);
  for (std::size_t j = 0; j < inner; ++j) {
    stage_[j] = full(j) * low[j] + h * half(j) * k3_[j];
  }
  nonlinear(stage_, k4_);
  for (std::size_t j = 0; j < inner; ++j) {
    low[j] = full(j) * low[j] +
             (h / 6.0) * (full(j) * k1_[j] + 2.0 * half(j) * (k2_[j] + k3_[j]) + k4_[j]);
  }
  for (std::size_t k = 0; k < offset; ++k) state[k] *= full_[k];
  for (std::size_t k = offset + inner; k < state.size(); ++k) state[k] *= full_[k];
}

SpectralField flow(const SpectralField& f0, const SimParams& p, double t) {
  return integrate(f0, p, t, LawsonStepper::Nonlinearity::gauged);
}

SpectralField flow_ungauged(const SpectralField& f0, const SimParams& p,
                            double t) {
  return integrate(f0, p, t, LawsonStepper::Nonlinearity::ungauged);
}

Trajectory evolve(const SpectralField& f0, const SimParams& p, int record_every) {
  p.validate();
  if (f0.cutoff() < p.N) throw InvalidParameter("evolve: field cutoff below N");
  if (record_every < 1) throw InvalidParameter("evolve: record_every must be >= 1");
  const int steps = step_count(p.horizon, p.dt);
  const double h = p.horizon / steps;
  Trajectory tr;
  tr.frame = Frame::lab;
  tr.times.push_back(0.0);
  tr.states.push_back(f0);
  LawsonStepper stepper(f0.cutoff(), p);
  SpectralField v = f0;
  for (int k = 1; k <= steps; ++k) {
    stepper.step(v, h);
    const double time = k * h;
    check_finite_state(v, time);
    if (k % record_every == 0 || k == steps) {
      tr.times.push_back(time);
      tr.states.push_back(v);
    }
  }
  return tr;
}

double hamiltonian(const SpectralField& v, const SimParams& p) {
  double kinetic = 0.0;
  const int n = v.cutoff();
  for (int k = -n; k <= n; ++k) kinetic += dispersion(k, p.alpha) * std::norm(v[k]);
  const double l4 = physical_lp(v.resized(std::min(p.N, n)), 4);
  return 0.5 * kinetic - 0.25 * static_cast<double>(p.sign) * std::pow(l4, 4);
}

ConservationReport conservation_report(const Trajectory& tr, const SimParams& p) {
  if (tr.states.empty()) throw InvalidParameter("conservation_report: empty trajectory");
  const double m0 = mass(tr.states.front());
  const double h0 = hamiltonian(tr.states.front(), p);
  ConservationReport report;
  for (const auto& v : tr.states) {
    report.mass_drift = std::max(report.mass_drift,
                                 std::abs(mass(v) - m0) / std::max(1.0, std::abs(m0)));
    report.energy_drift = std::max(report.energy_drift,
                                   std::abs(hamiltonian(v, p) - h0) / std::max(1.0, std::abs(h0)));
  }
  return report;
}

double suggested_dt(const SpectralField& f0) {
  return std::min(1e-2, 0.1 / (1.0 + mass(f0)));
}

}  // namespace fnls
