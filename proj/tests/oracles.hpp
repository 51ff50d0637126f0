#pragma once

// Brute-force references used only by the tests. Each one follows the
// defining formula with plain loops and shares no code path with the
// optimized implementations it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "fnls/dynamics.hpp"
#include "fnls/modified_energy.hpp"
#include "fnls/spectral_field.hpp"

namespace fnls::oracle {

inline double pow_abs(int n, double e) {
  return n == 0 ? 0.0 : std::pow(std::abs(static_cast<double>(n)), e);
}

inline double bracket_pow(int n, double e) {
  return std::pow(1.0 + static_cast<double>(n) * n, e / 2.0);
}

// P_N[(|P_N f|^2 - 2 M) P_N f] by a triple sum over all (n1, n2, n3) with
// n1 - n2 + n3 = n.
inline SpectralField cubic_triple_loop(const SpectralField& f, int N) {
  double m = 0.0;
  for (int k = -N; k <= N; ++k) m += std::norm(f[k]);
  SpectralField out(f.cutoff());
  for (int n = -N; n <= N; ++n) {
    std::complex<double> acc{};
    for (int n1 = -N; n1 <= N; ++n1) {
      for (int n2 = -N; n2 <= N; ++n2) {
        for (int n3 = -N; n3 <= N; ++n3) {
          if (n1 - n2 + n3 != n) continue;
          acc += f[n1] * std::conj(f[n2]) * f[n3];
        }
      }
    }
    out[n] = acc - 2.0 * m * f[n];
  }
  return out;
}

// R_{s,N} by a quadruple loop over Z^4 restricted to the non-resonant set.
inline double correction_quadruple_loop(const SpectralField& f, double s,
                                        double alpha, int N) {
  std::complex<double> acc{};
  for (int n1 = -N; n1 <= N; ++n1)
    for (int n2 = -N; n2 <= N; ++n2)
      for (int n3 = -N; n3 <= N; ++n3)
        for (int n = -N; n <= N; ++n) {
          if (n1 - n2 + n3 != n || n1 == n || n3 == n) continue;
          const double phi = pow_abs(n1, 2 * alpha) - pow_abs(n2, 2 * alpha) +
                             pow_abs(n3, 2 * alpha) - pow_abs(n, 2 * alpha);
          const double psi = bracket_pow(n1, 2 * s) - bracket_pow(n2, 2 * s) +
                             bracket_pow(n3, 2 * s) - bracket_pow(n, 2 * s);
          acc += (psi / phi) * f[n1] * std::conj(f[n2]) * f[n3] * std::conj(f[n]);
        }
  return -0.5 * acc.real();
}

// |Gamma_N(n)| by a double loop over (n1, n3).
inline int hyperplane_count(int n, int N) {
  int count = 0;
  for (int n1 = -N; n1 <= N; ++n1)
    for (int n3 = -N; n3 <= N; ++n3) {
      const int n2 = n1 + n3 - n;
      if (n1 != n && n3 != n && std::abs(n2) <= N) ++count;
    }
  return count;
}

// Fourth moment fint |u|^4 by midpoint quadrature of the physical function
// on a fine grid.
inline double quartic_mean_quadrature(const SpectralField& f, int points) {
  double acc = 0.0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int j = 0; j < points; ++j) {
    const double x = two_pi * (j + 0.5) / points;
    std::complex<double> u{};
    for (int k = -f.cutoff(); k <= f.cutoff(); ++k) {
      u += f[k] * std::polar(1.0, k * x);
    }
    acc += std::pow(std::norm(u), 2);
  }
  return acc / points;
}

// Five-point central difference of t -> E_s(Phi_N(t) v) at t = 0. The step
// keeps h times the largest sextic phase near 1e-2.
inline double energy_derivative(const SpectralField& v, const SimParams& p) {
  const double h = 2e-3 / (6.0 * std::pow(p.N, 2 * p.alpha));
  double e[5];
  for (int j = -2; j <= 2; ++j) {
    e[j + 2] = energy_E(flow(v, p, j * h), p.s, p.alpha, p.N).total;
  }
  return (e[0] - 8.0 * e[1] + 8.0 * e[3] - e[4]) / (12.0 * h);
}

inline SpectralField random_field(int N, std::uint64_t seed, double decay = 0.0) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g;
  SpectralField f(N);
  for (int k = -N; k <= N; ++k) {
    f[k] = std::complex<double>(g(gen), g(gen)) / std::pow(1.0 + k * k, decay / 2.0);
  }
  return f;
}

}  // namespace fnls::oracle
