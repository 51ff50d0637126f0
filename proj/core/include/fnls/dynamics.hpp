#pragma once

#include <vector>

#include "fnls/cubic.hpp"
#include "fnls/spectral_field.hpp"

namespace fnls {

// Physics and discretization of one run of the truncated gauged equation
//   i d_t v + (-d_x^2)^alpha v = sign * P_N[(|P_N v|^2 - 2 fint |P_N v|^2) P_N v].
struct SimParams {
  double alpha = 1.0;    // dispersion exponent
  double s = 1.0;        // Gaussian-measure regularity
  double eps = 0.1;      // sigma = s - 1/2 - eps
  int N = 8;             // Galerkin cutoff
  int sign = +1;         // +1 defocusing, -1 focusing, 0 linear flow only
  double dt = 1e-2;      // maximal step
  double horizon = 1.0;  // final time

  // Throws InvalidParameter on any violated constraint.
  void validate() const;
  double sigma() const { return s - 0.5 - eps; }
};

enum class Frame { lab, interaction };

struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  Frame frame = Frame::lab;
};

// S(t) f: mode n multiplied by e^{i t |n|^{2 alpha}}.
SpectralField linear_propagator(const SpectralField& f, double t, double alpha);

// G_t f = e^{2 i t ||f||_{L^2}^2} f, and its inverse G_{-t}.
SpectralField gauge_forward(const SpectralField& f, double t);
SpectralField gauge_inverse(const SpectralField& f, double t);

// Right-hand side d_t v of the truncated gauged equation in the lab frame:
//   d_t v_n = i |n|^{2 alpha} v_n - i sign cubic_term(v, N)_n.
// Requires f.cutoff() == p.N.
SpectralField rhs_gauged(const SpectralField& f, const SimParams& p);

// Literal interaction-frame right-hand side, summed over the non-resonant
// hyperplane:
//   d_t w_n = sign [ -i sum_{Gamma_N(n)} e^{i t phi} w_n1 conj(w_n2) w_n3
//                    + i |w_n|^2 w_n ].
SpectralField rhs_interaction(const SpectralField& w, double t,
                              const SimParams& p);

// Lawson-type fourth-order Runge-Kutta step for the truncated flow: the
// dispersive phases are applied exactly and classical RK4 acts on the
// interaction variable. Modes above the cutoff N rotate linearly. Owns its
// workspace; use one stepper per thread.
class LawsonStepper {
 public:
  enum class Nonlinearity { gauged, ungauged };

  LawsonStepper(int field_cutoff, const SimParams& p,
                Nonlinearity kind = Nonlinearity::gauged);

  // Advances v in place by h (h may be negative).
  void step(SpectralField& v, double h);

 private:
  void nonlinear(std::span<const Complex> v, std::span<Complex> out);
  void set_step(double h);

  int cutoff_;
  SimParams params_;
  Nonlinearity kind_;
  CubicNonlinearity cubic_;
  std::vector<double> omega_;
  double cached_h_ = 0.0;
  std::vector<Complex> half_, full_;
  std::vector<Complex> k1_, k2_, k3_, k4_, stage_;
};

// Phi_N(t) f0 for signed t, using ceil(|t| / p.dt) equal steps. Throws
// BlowupDetected if a coefficient becomes non-finite or exceeds 1e12.
SpectralField flow(const SpectralField& f0, const SimParams& p, double t);

// Same integrator applied to the ungauged truncated equation
//   i d_t u + (-d_x^2)^alpha u = sign P_N[|P_N u|^2 P_N u].
SpectralField flow_ungauged(const SpectralField& f0, const SimParams& p,
                            double t);

// Integrates from 0 to p.horizon and records the lab-frame state every
// `record_every` steps (the initial and final states are always kept).
// Requires f0.cutoff() >= p.N; modes above N evolve linearly.
Trajectory evolve(const SpectralField& f0, const SimParams& p,
                  int record_every = 1);

// Hamiltonian of the truncated flow,
//   1/2 sum |n|^{2 alpha} |v_n|^2 - sign/4 fint |P_N v|^4.
double hamiltonian(const SpectralField& v, const SimParams& p);

struct ConservationReport {
  double mass_drift = 0.0;
  double energy_drift = 0.0;
};

// Max over recorded states of |Q(t) - Q(0)| / max(1, |Q(0)|) for the mass and
// the Hamiltonian.
ConservationReport conservation_report(const Trajectory& tr,
                                       const SimParams& p);

// min(1e-2, 0.1 / (1 + ||f0||_{L^2}^2)).
double suggested_dt(const SpectralField& f0);

}  // namespace fnls
