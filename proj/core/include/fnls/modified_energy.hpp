#pragma once

#include <optional>

#include "fnls/dynamics.hpp"
#include "fnls/spectral_field.hpp"

namespace fnls {

// The four pieces of d/dt E_{s,t}(P_N w) along the truncated flow: the
// non-resonant (N1, N2) and resonant (R1, R2) parts of d_t w substituted into
// the first and second slots of the quartic form.
struct DerivativeTerms {
  double n1 = 0.0;
  double r1 = 0.0;
  double n2 = 0.0;
  double r2 = 0.0;
  // |Im| of the unsymmetrized accumulator relative to its magnitude; the
  // symmetrization makes this zero up to rounding.
  double imag_residue = 0.0;

  double sum() const { return n1 + r1 + n2 + r2; }
};

struct EnergyReport {
  double h_s_sq = 0.0;      // ||P_N f||_{H^s}^2
  double correction = 0.0;  // R_{s,N}(P_N f)
  double total = 0.0;       // E_s = h_s_sq + correction
  std::optional<DerivativeTerms> terms;
};

// sum over Gamma_N(nbar) of (psi_s / phi) a_{n1} conj(b_{n2}) c_{n3} conj(d_n),
// O(N^3). All fields need cutoff >= N. Throws UnsupportedRegime for
// alpha <= 1/2.
Complex normal_form_sum(const SpectralField& a, const SpectralField& b,
                        const SpectralField& c, const SpectralField& d,
                        double s, double alpha, int N);

// R_{s,N}(f) = -1/2 Re sum_{Gamma_N} (psi_s / phi) f_{n1} conj(f_{n2}) f_{n3} conj(f_n).
double correction_R(const SpectralField& f, double s, double alpha, int N);

EnergyReport energy_E(const SpectralField& f, double s, double alpha, int N);

// N1 + R1 + N2 + R2 at time t for an interaction-frame state w, evaluated
// in the lab frame V = S(t) P_N w. The inner cubic sums come from one padded
// FFT, so the cost is dominated by the O(N^3) outer sums. The cancellation
// behind the decomposition holds for the defocusing sign only; other signs
// throw UnsupportedRegime.
DerivativeTerms derivative_terms(const SpectralField& w, double t,
                                 const SimParams& p);

// d/dt E_s(Phi_N(t) v) at t = 0 by a five-point central difference. The
// step h = min(1e-5, 0.02 / (6 N^{2 alpha})) resolves the fastest phase.
double energy_derivative_fd(const SpectralField& v, const SimParams& p);

// |d/dt E_s| / ||f||_{H^{s - 1/2 - eps}}^6 at t = 0; zero for f = 0.
double energy_ratio_strong(const SpectralField& f, const SimParams& p);

// |d/dt E_s| / (||f||_{FL^{s - eps_tilde, inf}}^2 ||f||_{H^{s - 1/2 - eps}}^4)
// at t = 0; zero for f = 0. Throws InvalidParameter unless
// 0 < eps_tilde < p.eps.
double energy_ratio_weak(const SpectralField& f, const SimParams& p,
                         double eps_tilde);

// Regions of (alpha, s) for which the sextic energy estimate is proved.
enum class EnergyRegime { high_regularity, high_dispersion, mid_dispersion, outside };

EnergyRegime energy_estimate_regime(double alpha, double s);
const char* to_string(EnergyRegime regime);

}  // namespace fnls
