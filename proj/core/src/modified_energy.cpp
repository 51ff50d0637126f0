#include "fnls/modified_energy.hpp"

#include <algorithm>
#include <cmath>

#include "fnls/cubic.hpp"
#include "fnls/error.hpp"
#include "fnls/norms.hpp"
#include "fnls/parallel.hpp"
#include "fnls/phase.hpp"

namespace fnls {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_dispersive(double alpha) {
  if (!(alpha > 0.5)) {
    throw UnsupportedRegime("modified energy requires alpha > 1/2");
  }
}

void require_cutoff(const SpectralField& f, int N) {
  if (N < 0 || f.cutoff() < N) {
    throw InvalidParameter("modified energy: field cutoff below N");
  }
}

}  // namespace

Complex normal_form_sum(const SpectralField& a, const SpectralField& b,
                        const SpectralField& c, const SpectralField& d,
                        double s, double alpha, int N) {
  require_dispersive(alpha);
  for (const auto* f : {&a, &b, &c, &d}) require_cutoff(*f, N);
  const WeightTable table(N, alpha, s);
  // One task per output mode n; partial sums are added in mode order.
  auto partial = parallel::map_indexed(2 * N + 1, [&](int slice) {
    const int n = slice - N;
    const Complex dn = std::conj(d[n]);
    Complex acc{};
    for (int n1 = -N; n1 <= N; ++n1) {
      if (n1 == n) continue;
      const int lo = std::max(-N, -N + n - n1);
      const int hi = std::min(N, N + n - n1);
      Complex inner{};
      for (int n3 = lo; n3 <= hi; ++n3) {
        if (n3 == n) continue;
        const int n2 = n1 + n3 - n;
        const double kernel = table.psi(n1, n2, n3, n) / table.phase(n1, n2, n3, n);
        inner += kernel * std::conj(b[n2]) * c[n3];
      }
      acc += a[n1] * inner;
    }
    return acc * dn;
  });
  Complex total{};
  for (const auto& v : partial) total += v;
  return total;
}

double correction_R(const SpectralField& f, double s, double alpha, int N) {
  return -0.5 * normal_form_sum(f, f, f, f, s, alpha, N).real();
}

EnergyReport energy_E(const SpectralField& f, double s, double alpha, int N) {
  require_dispersive(alpha);
  require_cutoff(f, N);
  EnergyReport report;
  const double h = sobolev_norm(f.resized(N), SobolevIndex{s});
  report.h_s_sq = h * h;
  report.correction = correction_R(f, s, alpha, N);
  report.total = report.h_s_sq + report.correction;
  return report;
}

DerivativeTerms derivative_terms(const SpectralField& w, double t,
                                 const SimParams& p) {
  require_dispersive(p.alpha);
  require_cutoff(w, p.N);
  if (p.sign != 1) {
    throw UnsupportedRegime("the normal-form decomposition assumes the defocusing sign");
  }
  const int N = p.N;
  const SpectralField v = linear_propagator(w.resized(N), t, p.alpha);
  if (v.is_zero()) return {};

  // Lab-frame images S(t) of the non-resonant and resonant parts of d_t w.
  // On the hyperplane, sum_{Gamma_N(n)} v v* v = cubic_term(v)_n + |v_n|^2 v_n.
  const double sign = static_cast<double>(p.sign);
  SpectralField nonres = cubic_term(v, N);
  SpectralField res(N);
  for (int k = -N; k <= N; ++k) {
    const Complex cube = std::norm(v[k]) * v[k];
    nonres[k] = -kI * sign * (nonres[k] + cube);
    res[k] = kI * sign * cube;
  }

  const Complex t1n = normal_form_sum(nonres, v, v, v, p.s, p.alpha, N);
  const Complex t1r = normal_form_sum(res, v, v, v, p.s, p.alpha, N);
  const Complex t2n = normal_form_sum(v, nonres, v, v, p.s, p.alpha, N);
  const Complex t2r = normal_form_sum(v, res, v, v, p.s, p.alpha, N);

  DerivativeTerms terms;
  terms.n1 = -t1n.real();
  terms.r1 = -t1r.real();
  terms.n2 = -t2n.real();
  terms.r2 = -t2r.real();
  const Complex total = t1n + t1r + t2n + t2r;
  const double scale =
      std::abs(t1n) + std::abs(t1r) + std::abs(t2n) + std::abs(t2r);
  terms.imag_residue = scale > 0.0 ? std::abs(total.imag()) / scale : 0.0;
  return terms;
}

double energy_derivative_fd(const SpectralField& v, const SimParams& p) {
  require_cutoff(v, p.N);
  const double omega = 6.0 * std::max(1.0, dispersion(p.N, p.alpha));
  const double h = std::min(1e-5, 0.02 / omega);
  auto energy_at = [&](double t) {
    return energy_E(flow(v, p, t), p.s, p.alpha, p.N).total;
  };
  return (8.0 * (energy_at(h) - energy_at(-h)) - (energy_at(2 * h) - energy_at(-2 * h))) /
         (12.0 * h);
}

double energy_ratio_strong(const SpectralField& f, const SimParams& p) {
  if (f.is_zero()) return 0.0;
  const double num = std::abs(derivative_terms(f, 0.0, p).sum());
  const double den = std::pow(sobolev_norm(f, SobolevIndex{p.sigma()}), 6);
  return num / den;
}

double energy_ratio_weak(const SpectralField& f, const SimParams& p,
                         double eps_tilde) {
  if (!(eps_tilde > 0.0 && eps_tilde < p.eps)) {
    throw InvalidParameter("energy_ratio_weak requires 0 < eps_tilde < eps");
  }
  if (f.is_zero()) return 0.0;
  const double num = std::abs(derivative_terms(f, 0.0, p).sum());
  const double fl = fourier_lebesgue_norm(f, SobolevIndex{p.s - eps_tilde}, kInfinity);
  const double hs = sobolev_norm(f, SobolevIndex{p.sigma()});
  return num / (fl * fl * std::pow(hs, 4));
}

EnergyRegime energy_estimate_regime(double alpha, double s) {
  if (s > 1.0 && alpha > 0.5) return EnergyRegime::high_regularity;
  if (alpha >= 1.25 && s > std::max(2.0 / 3.0, 25.0 / 12.0 - alpha) && s <= 1.0) {
    return EnergyRegime::high_dispersion;
  }
  if (alpha > 1.0 && alpha < 1.25 && s > (3.0 - alpha) / 2.0 && s <= 1.0) {
    return EnergyRegime::mid_dispersion;
  }
  return EnergyRegime::outside;
}

const char* to_string(EnergyRegime regime) {
  switch (regime) {
    case EnergyRegime::high_regularity: return "s>1";
    case EnergyRegime::high_dispersion: return "alpha>=5/4";
    case EnergyRegime::mid_dispersion: return "1<alpha<5/4";
    case EnergyRegime::outside: return "outside";
  }
  return "outside";
}

}  // namespace fnls
