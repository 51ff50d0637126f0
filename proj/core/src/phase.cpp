#include "fnls/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fnls/error.hpp"

namespace fnls {

int FrequencyQuad::max_abs() const {
  return std::max({std::abs(n1), std::abs(n2), std::abs(n3), std::abs(n)});
}

double dispersion(int n, double alpha) {
  if (n == 0) return 0.0;
  return std::pow(static_cast<double>(std::abs(n)), 2.0 * alpha);
}

double sobolev_weight(int n, double s) {
  return std::pow(1.0 + static_cast<double>(n) * n, s);
}

double phase(const FrequencyQuad& q, double alpha) {
  return dispersion(q.n1, alpha) - dispersion(q.n2, alpha) +
         dispersion(q.n3, alpha) - dispersion(q.n, alpha);
}

double psi(const FrequencyQuad& q, double s) {
  return sobolev_weight(q.n1, s) - sobolev_weight(q.n2, s) +
         sobolev_weight(q.n3, s) - sobolev_weight(q.n, s);
}

double multiplier(const FrequencyQuad& q, double s, double alpha) {
  if (!q.nonresonant()) {
    throw ResonantQuad("multiplier: quadruple is not on the non-resonant set");
  }
  const double phi = phase(q, alpha);
  if (phi == 0.0) throw ResonantQuad("multiplier: phase vanishes");
  return psi(q, s) / phi;
}

WeightTable::WeightTable(int radius, double alpha, double s)
    : radius_(radius),
      disp_(static_cast<std::size_t>(2 * radius + 1)),
      sob_(static_cast<std::size_t>(2 * radius + 1)) {
  if (radius < 0) throw InvalidParameter("WeightTable: negative radius");
  for (int n = -radius; n <= radius; ++n) {
    disp_[idx(n)] = fnls::dispersion(n, alpha);
    sob_[idx(n)] = sobolev_weight(n, s);
  }
}

}  // namespace fnls
