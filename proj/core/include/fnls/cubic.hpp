#pragma once

#include <span>
#include <vector>

#include "fnls/spectral_field.hpp"

namespace fnls {

// Dealiased evaluation of the cubic nonlinearity on modes |n| <= N through a
// zero-padded FFT grid. Holds its grid as workspace, so one instance should
// not be shared between threads; construct one per worker.
class CubicNonlinearity {
 public:
  explicit CubicNonlinearity(int cutoff);

  int cutoff() const { return cutoff_; }
  int grid_size() const { return static_cast<int>(grid_.size()); }

  // out = P_N[(|P_N v|^2 - 2 M(P_N v)) P_N v], with `in` and `out` centered
  // spans over modes -N..N.
  void gauged(std::span<const Complex> in, std::span<Complex> out);
  // out = P_N[|P_N v|^2 P_N v] (no mean-field correction).
  void ungauged(std::span<const Complex> in, std::span<Complex> out);

 private:
  void convolve(std::span<const Complex> in, std::span<Complex> out,
                double mean_field_factor);

  int cutoff_;
  std::vector<Complex> grid_;
};

// Gauged cubic term P_N[(|P_N f|^2 - 2 fint |P_N f|^2) P_N f]. The result
// has f's cutoff; modes |n| > N are zero. Requires N <= f.cutoff().
SpectralField cubic_term(const SpectralField& f, int N);

// P_N[|P_N f|^2 P_N f], the nonlinearity of the ungauged truncated equation.
SpectralField cubic_term_ungauged(const SpectralField& f, int N);

}  // namespace fnls
