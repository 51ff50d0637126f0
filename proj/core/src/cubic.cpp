#include "fnls/cubic.hpp"

#include "fft.hpp"
#include "fnls/error.hpp"

namespace fnls {

CubicNonlinearity::CubicNonlinearity(int cutoff)
    : cutoff_(cutoff),
      grid_(static_cast<std::size_t>(detail::padded_grid_size(cutoff))) {
  if (cutoff < 0) throw InvalidParameter("CubicNonlinearity: negative cutoff");
}

void CubicNonlinearity::gauged(std::span<const Complex> in,
                               std::span<Complex> out) {
  convolve(in, out, 2.0);
}

void CubicNonlinearity::ungauged(std::span<const Complex> in,
                                 std::span<Complex> out) {
  convolve(in, out, 0.0);
}

void CubicNonlinearity::convolve(std::span<const Complex> in,
                                 std::span<Complex> out,
                                 double mean_field_factor) {
  double m = 0.0;
  for (const auto& c : in) m += std::norm(c);
  detail::scatter_modes(in, grid_);
  detail::to_physical(grid_);
  const double shift = mean_field_factor * m;
  for (auto& u : grid_) u *= std::norm(u) - shift;
  detail::to_spectral(grid_);
  detail::gather_modes(grid_, out);
}

namespace {

SpectralField apply_cubic(const SpectralField& f, int N, bool gauge) {
  if (N < 0 || N > f.cutoff()) {
    throw InvalidParameter("cubic_term: need 0 <= N <= f.cutoff()");
  }
  const auto offset = static_cast<std::size_t>(f.cutoff() - N);
  const auto width = static_cast<std::size_t>(2 * N + 1);
  SpectralField out(f.cutoff());
  CubicNonlinearity op(N);
  auto in = f.coeffs().subspan(offset, width);
  auto dst = out.coeffs().subspan(offset, width);
  if (gauge) {
    op.gauged(in, dst);
  } else {
    op.ungauged(in, dst);
  }
  return out;
}

}  // namespace

SpectralField cubic_term(const SpectralField& f, int N) {
  return apply_cubic(f, N, true);
}

SpectralField cubic_term_ungauged(const SpectralField& f, int N) {
  return apply_cubic(f, N, false);
}

}  // namespace fnls
