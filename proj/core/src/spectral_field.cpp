#include "fnls/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/error.hpp"

namespace fnls {

double japanese(int n) {
  const double x = static_cast<double>(n);
  return std::sqrt(1.0 + x * x);
}

SpectralField::SpectralField(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw InvalidParameter("SpectralField: negative cutoff");
  coeffs_.assign(static_cast<std::size_t>(2 * cutoff + 1), Complex{});
}

SpectralField::SpectralField(int cutoff, std::vector<Complex> coeffs)
    : cutoff_(cutoff), coeffs_(std::move(coeffs)) {
  if (cutoff < 0) throw InvalidParameter("SpectralField: negative cutoff");
  if (coeffs_.size() != static_cast<std::size_t>(2 * cutoff + 1)) {
    throw InvalidParameter("SpectralField: expected " +
                           std::to_string(2 * cutoff + 1) +
                           " coefficients, got " +
                           std::to_string(coeffs_.size()));
  }
  if (!all_finite()) {
    throw InvalidParameter("SpectralField: non-finite coefficient");
  }
}

SpectralField SpectralField::single_mode(int cutoff, int mode, Complex value) {
  if (std::abs(mode) > cutoff) {
    throw InvalidParameter("single_mode: |mode| exceeds cutoff");
  }
  SpectralField f(cutoff);
  f[mode] = value;
  return f;
}

Complex SpectralField::at(int mode) const {
  if (mode < -cutoff_ || mode > cutoff_) return {};
  return coeffs_[index(mode)];
}

SpectralField SpectralField::projected(int n) const {
  SpectralField out(cutoff_);
  const int keep = std::min(n, cutoff_);
  for (int k = -keep; k <= keep; ++k) out[k] = (*this)[k];
  return out;
}

SpectralField SpectralField::resized(int new_cutoff) const {
  SpectralField out(new_cutoff);
  const int keep = std::min(new_cutoff, cutoff_);
  for (int k = -keep; k <= keep; ++k) out[k] = (*this)[k];
  return out;
}

bool SpectralField::all_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

bool SpectralField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Complex c) { return c == Complex{}; });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (other.cutoff_ != cutoff_) {
    throw InvalidParameter("SpectralField: cutoff mismatch in +=");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  if (other.cutoff_ != cutoff_) {
    throw InvalidParameter("SpectralField: cutoff mismatch in -=");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

SpectralField& SpectralField::operator*=(Complex factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

double max_abs_difference(const SpectralField& a, const SpectralField& b) {
  const int n = std::max(a.cutoff(), b.cutoff());
  double worst = 0.0;
  for (int k = -n; k <= n; ++k) worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
  return worst;
}

}  // namespace fnls
