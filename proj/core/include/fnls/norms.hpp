#pragma once

#include <limits>

#include "fnls/spectral_field.hpp"

namespace fnls {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// ||f||_{H^sigma} = (sum_n <n>^{2 sigma} |f_n|^2)^{1/2}.
double sobolev_norm(const SpectralField& f, SobolevIndex sigma);

// || <n>^sigma f_n ||_{l^q}; q = kInfinity gives the weighted supremum.
// Throws InvalidParameter for q < 1.
double fourier_lebesgue_norm(const SpectralField& f, SobolevIndex sigma,
                             double q);

// L^p norm under the normalized measure (1/2pi) dx, p in {2, 4}.
// p = 2 uses Parseval; p = 4 uses a zero-padded grid on which the quartic
// mean is computed exactly.
double physical_lp(const SpectralField& f, int p);

// Mass sum_n |f_n|^2 = ||f||_{L^2}^2.
double mass(const SpectralField& f);

// Gagliardo-Nirenberg quotient
//   ||f||_{L^4}^4 / (A^{1/alpha} ||f||_{L^2}^{4 - 1/alpha}),
//   A = (sum <n>^{2 alpha} |f_n|^2)^{1/2}.
// The inhomogeneous weight keeps the quotient bounded on constants.
// Throws UndefinedRatio for f = 0, InvalidParameter for alpha < 1/4.
double gn_ratio(const SpectralField& f, double alpha);

}  // namespace fnls
