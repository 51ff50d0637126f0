#pragma once

#include <span>

#include "fnls/spectral_field.hpp"

namespace fnls::detail {

// Smallest power of two >= 2(2N+1). Cubic products of modes |k| <= N then
// alias only onto modes |k| > N.
int padded_grid_size(int cutoff);

// In-place transforms on a grid of size L = data.size().
// to_physical:  u_j = sum_k c_k e^{+2 pi i k j / L}
// to_spectral:  c_k = (1/L) sum_j u_j e^{-2 pi i k j / L}
void to_physical(std::span<Complex> data);
void to_spectral(std::span<Complex> data);

// Scatter modes -n..n of `modes` (a centered span of length 2n+1) onto the
// grid, zeroing everything else; and the reverse gather.
void scatter_modes(std::span<const Complex> modes, std::span<Complex> grid);
void gather_modes(std::span<const Complex> grid, std::span<Complex> modes);

}  // namespace fnls::detail
