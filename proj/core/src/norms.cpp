#include "fnls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fft.hpp"
#include "fnls/error.hpp"

namespace fnls {

double sobolev_norm(const SpectralField& f, SobolevIndex sigma) {
  const int n = f.cutoff();
  double sum = 0.0;
  for (int k = -n; k <= n; ++k) {
    const double weight = std::pow(1.0 + static_cast<double>(k) * k, sigma.sigma);
    sum += weight * std::norm(f[k]);
  }
  return std::sqrt(sum);
}

double fourier_lebesgue_norm(const SpectralField& f, SobolevIndex sigma,
                             double q) {
  if (!(q >= 1.0)) throw InvalidParameter("fourier_lebesgue_norm: q < 1");
  const int n = f.cutoff();
  if (std::isinf(q)) {
    double sup = 0.0;
    for (int k = -n; k <= n; ++k) {
      sup = std::max(sup, std::pow(japanese(k), sigma.sigma) * std::abs(f[k]));
    }
    return sup;
  }
  if (q == 2.0) return sobolev_norm(f, sigma);
  double sum = 0.0;
  for (int k = -n; k <= n; ++k) {
    sum += std::pow(std::pow(japanese(k), sigma.sigma) * std::abs(f[k]), q);
  }
  return std::pow(sum, 1.0 / q);
}

double mass(const SpectralField& f) {
  double sum = 0.0;
  for (const auto& c : f.coeffs()) sum += std::norm(c);
  return sum;
}

double physical_lp(const SpectralField& f, int p) {
  if (p == 2) return std::sqrt(mass(f));
  if (p != 4) throw InvalidParameter("physical_lp: p must be 2 or 4");
  std::vector<Complex> grid(
      static_cast<std::size_t>(detail::padded_grid_size(f.cutoff())));
  detail::scatter_modes(f.coeffs(), grid);
  detail::to_physical(grid);
  double sum = 0.0;
  for (const auto& u : grid) {
    const double m = std::norm(u);
    sum += m * m;
  }
  return std::pow(sum / static_cast<double>(grid.size()), 0.25);
}

double gn_ratio(const SpectralField& f, double alpha) {
  if (alpha < 0.25) throw InvalidParameter("gn_ratio: alpha < 1/4");
  if (f.is_zero()) throw UndefinedRatio("gn_ratio: zero field");
  const double l4 = physical_lp(f, 4);
  const double l2 = physical_lp(f, 2);
  const double a = sobolev_norm(f, SobolevIndex{alpha});
  return std::pow(l4, 4) /
         (std::pow(a, 1.0 / alpha) * std::pow(l2, 4.0 - 1.0 / alpha));
}

}  // namespace fnls
