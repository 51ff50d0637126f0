#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "fnls/phase.hpp"

namespace fnls {

using Triple = std::array<int, 3>;

namespace detail {
[[noreturn]] void throw_invalid_hyperplane();
}

// Visits every (n1, n2, n3) with n1 - n2 + n3 = n, |n_j| <= N, n1 != n and
// n3 != n, in order of ascending n1, then ascending n3. Throws
// InvalidParameter when |n| > N.
template <class Visitor>
void for_each_in_hyperplane(int n, int N, Visitor&& visit);

std::vector<Triple> enumerate_hyperplane(int n, int N);

// Empirical constants from an exhaustive lattice scan.
struct BoundReport {
  double alpha = 0.0;
  double s = 0.0;
  int scan_radius = 0;
  double min_ratio = 0.0;
  FrequencyQuad argmin_quad;
  double max_ratio = 0.0;
  FrequencyQuad argmax_quad;
  std::int64_t quads_scanned = 0;
};

// Scans all non-resonant quads with max |n_j| <= radius and reports
//   |phi| / (|n - n1| |n - n3| n_max^{2 alpha - 2}).
// Throws UnsupportedRegime for alpha <= 1/2, InvalidParameter for radius < 1.
BoundReport verify_phase_lower_bound(double alpha, int radius);

// Same scan for |psi_s| / (|n - n1| |n - n3| <n_max>^{2s - 2}).
// Throws UnsupportedRegime for s <= 1.
BoundReport verify_dmvt_bound(double s, int radius);

// Number of positive divisors, by trial division up to sqrt(m).
std::int64_t divisor_count(std::int64_t m);

// All ordered integer pairs (a, b), negative factors included, with a*b = rho.
std::vector<std::pair<std::int64_t, std::int64_t>> factor_pairs(std::int64_t rho);

struct DivisorScan {
  double delta = 0.0;
  std::int64_t m_max = 0;
  double max_ratio = 0.0;  // max d(m) / m^delta
  std::int64_t argmax = 1;
};

DivisorScan divisor_bound_scan(double delta, std::int64_t m_max);

// sum_{1 <= |n| <= |k|} |n|^{-beta}.
double varphi_beta(std::int64_t k, double beta);

// Bounds of varphi_beta(k) / g(k) over 1 <= k <= k_max, where g is the
// predicted growth: 1 for beta > 1, log(1 + <k>) for beta = 1 and
// <k>^{1 - beta} for beta < 1.
struct VarphiReport {
  double beta = 0.0;
  std::int64_t k_max = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

VarphiReport verify_varphi_regimes(double beta, std::int64_t k_max);

template <class Visitor>
void for_each_in_hyperplane(int n, int N, Visitor&& visit) {
  if (N < 0 || std::abs(n) > N) {
    detail::throw_invalid_hyperplane();
  }
  for (int n1 = -N; n1 <= N; ++n1) {
    if (n1 == n) continue;
    for (int n3 = -N; n3 <= N; ++n3) {
      if (n3 == n) continue;
      const int n2 = n1 + n3 - n;
      if (n2 < -N || n2 > N) continue;
      visit(n1, n2, n3);
    }
  }
}

}  // namespace fnls
