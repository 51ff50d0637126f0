#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fnls {

using Complex = std::complex<double>;

// Regularity exponent of a Sobolev or Fourier-Lebesgue norm.
struct SobolevIndex {
  double sigma = 0.0;
};

// Japanese bracket <n> = (1 + n^2)^{1/2}.
double japanese(int n);

// Fourier coefficients of a function on the torus T = R/2piZ, truncated to
// modes -N..N. Storage is contiguous and ordered by mode, so entry k holds
// the coefficient of mode k - N.
class SpectralField {
 public:
  SpectralField() : SpectralField(0) {}
  explicit SpectralField(int cutoff);
  // Throws InvalidParameter unless coeffs.size() == 2N+1 and every entry is
  // finite.
  SpectralField(int cutoff, std::vector<Complex> coeffs);

  static SpectralField single_mode(int cutoff, int mode, Complex value);

  int cutoff() const { return cutoff_; }
  std::size_t size() const { return coeffs_.size(); }

  // Mode-indexed access; mode must satisfy |mode| <= cutoff.
  Complex operator[](int mode) const { return coeffs_[index(mode)]; }
  Complex& operator[](int mode) { return coeffs_[index(mode)]; }

  // Coefficient of `mode`, or zero when |mode| > cutoff.
  Complex at(int mode) const;

  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  // P_{<=n}: same cutoff, modes |k| > n set to zero.
  SpectralField projected(int n) const;
  // Same coefficients re-stored with a different cutoff (pads with zeros or
  // drops modes beyond the new cutoff).
  SpectralField resized(int new_cutoff) const;

  bool all_finite() const;
  bool is_zero() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(Complex factor);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    return a += b;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    return a -= b;
  }
  friend SpectralField operator*(Complex c, SpectralField a) { return a *= c; }
  friend SpectralField operator*(SpectralField a, Complex c) { return a *= c; }

  bool operator==(const SpectralField&) const = default;

 private:
  std::size_t index(int mode) const {
    return static_cast<std::size_t>(mode + cutoff_);
  }

  int cutoff_;
  std::vector<Complex> coeffs_;
};

// Largest coefficient-wise |a_n - b_n| over the union of both mode ranges.
double max_abs_difference(const SpectralField& a, const SpectralField& b);

}  // namespace fnls
