#include "fnls/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fnls/error.hpp"
#include "fnls/parallel.hpp"

namespace fnls {

namespace detail {
void throw_invalid_hyperplane() {
  throw InvalidParameter("hyperplane enumeration requires |n| <= N");
}
}  // namespace detail

std::vector<Triple> enumerate_hyperplane(int n, int N) {
  std::vector<Triple> out;
  for_each_in_hyperplane(n, N, [&](int n1, int n2, int n3) {
    out.push_back({n1, n2, n3});
  });
  return out;
}

namespace {

struct SliceExtrema {
  double min_ratio = std::numeric_limits<double>::infinity();
  FrequencyQuad argmin;
  double max_ratio = -std::numeric_limits<double>::infinity();
  FrequencyQuad argmax;
  std::int64_t count = 0;
};

// Walks every non-resonant quad inside the box of the given radius, one
// n1-slice per task, and combines slice extrema in slice order.
template <class RatioFn>
BoundReport scan_box(int radius, RatioFn&& ratio_of) {
  const int slices = 2 * radius + 1;
  auto partial = parallel::map_indexed(slices, [&](int slice) {
    SliceExtrema ext;
    const int n1 = slice - radius;
    for (int n = -radius; n <= radius; ++n) {
      if (n == n1) continue;
      for (int n3 = -radius; n3 <= radius; ++n3) {
        if (n3 == n) continue;
        const int n2 = n1 + n3 - n;
        if (n2 < -radius || n2 > radius) continue;
        const FrequencyQuad q{n1, n2, n3, n};
        const double r = ratio_of(q);
        ++ext.count;
        if (r < ext.min_ratio) {
          ext.min_ratio = r;
          ext.argmin = q;
        }
        if (r > ext.max_ratio) {
          ext.max_ratio = r;
          ext.argmax = q;
        }
      }
    }
    return ext;
  });

  SliceExtrema total;
  for (const auto& ext : partial) {
    total.count += ext.count;
    if (ext.min_ratio < total.min_ratio) {
      total.min_ratio = ext.min_ratio;
      total.argmin = ext.argmin;
    }
    if (ext.max_ratio > total.max_ratio) {
      total.max_ratio = ext.max_ratio;
      total.argmax = ext.argmax;
    }
  }
  BoundReport report;
  report.scan_radius = radius;
  report.min_ratio = total.min_ratio;
  report.argmin_quad = total.argmin;
  report.max_ratio = total.max_ratio;
  report.argmax_quad = total.argmax;
  report.quads_scanned = total.count;
  return report;
}

}  // namespace

BoundReport verify_phase_lower_bound(double alpha, int radius) {
  if (!(alpha > 0.5)) {
    throw UnsupportedRegime("phase lower bound requires alpha > 1/2");
  }
  if (radius < 1) throw InvalidParameter("scan radius must be >= 1");
  const WeightTable table(radius, alpha, 1.0);
  std::vector<double> nmax_power(static_cast<std::size_t>(radius + 1));
  for (int m = 1; m <= radius; ++m) {
    nmax_power[static_cast<std::size_t>(m)] = std::pow(static_cast<double>(m), 2.0 * alpha - 2.0);
  }
  auto report = scan_box(radius, [&](const FrequencyQuad& q) {
    const double phi = table.phase(q.n1, q.n2, q.n3, q.n);
    const double gaps = static_cast<double>(std::abs(q.n - q.n1)) *
                        static_cast<double>(std::abs(q.n - q.n3));
    return std::abs(phi) / (gaps * nmax_power[static_cast<std::size_t>(q.max_abs())]);
  });
  report.alpha = alpha;
  return report;
}

BoundReport verify_dmvt_bound(double s, int radius) {
  if (!(s > 1.0)) throw UnsupportedRegime("DMVT bound requires s > 1");
  if (radius < 1) throw InvalidParameter("scan radius must be >= 1");
  const WeightTable table(radius, 1.0, s);
  std::vector<double> bracket_power(static_cast<std::size_t>(radius + 1));
  for (int m = 0; m <= radius; ++m) {
    bracket_power[static_cast<std::size_t>(m)] = std::pow(1.0 + static_cast<double>(m) * m, s - 1.0);
  }
  auto report = scan_box(radius, [&](const FrequencyQuad& q) {
    const double p = table.psi(q.n1, q.n2, q.n3, q.n);
    const double gaps = static_cast<double>(std::abs(q.n - q.n1)) *
                        static_cast<double>(std::abs(q.n - q.n3));
    return std::abs(p) / (gaps * bracket_power[static_cast<std::size_t>(q.max_abs())]);
  });
  report.s = s;
  return report;
}

std::int64_t divisor_count(std::int64_t m) {
  if (m <= 0) throw InvalidParameter("divisor_count requires m >= 1");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    count += (d * d == m) ? 1 : 2;
  }
  return count;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factor_pairs(std::int64_t rho) {
  if (rho == 0) throw InvalidParameter("factor_pairs requires rho != 0");
  const std::int64_t mag = rho < 0 ? -rho : rho;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = 1; d <= mag; ++d) {
    if (mag % d == 0) out.emplace_back(d, rho / d);
  }
  for (std::int64_t d = 1; d <= mag; ++d) {
    if (mag % d == 0) out.emplace_back(-d, rho / -d);
  }
  return out;
}

DivisorScan divisor_bound_scan(double delta, std::int64_t m_max) {
  if (m_max < 1) throw InvalidParameter("divisor scan requires m_max >= 1");
  if (!(delta > 0.0)) throw InvalidParameter("divisor scan requires delta > 0");
  DivisorScan scan{delta, m_max, 0.0, 1};
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double r = static_cast<double>(divisor_count(m)) /
                     std::pow(static_cast<double>(m), delta);
    if (r > scan.max_ratio) {
      scan.max_ratio = r;
      scan.argmax = m;
    }
  }
  return scan;
}

double varphi_beta(std::int64_t k, double beta) {
  const std::int64_t mag = k < 0 ? -k : k;
  double sum = 0.0;
  for (std::int64_t n = 1; n <= mag; ++n) {
    sum += std::pow(static_cast<double>(n), -beta);
  }
  return 2.0 * sum;
}

VarphiReport verify_varphi_regimes(double beta, std::int64_t k_max) {
  if (k_max < 1) throw InvalidParameter("varphi scan requires k_max >= 1");
  if (beta < 0.0) throw InvalidParameter("varphi scan requires beta >= 0");
  VarphiReport report{beta, k_max, std::numeric_limits<double>::infinity(), 0.0};
  double partial = 0.0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    partial += 2.0 * std::pow(static_cast<double>(k), -beta);
    const double bracket = std::sqrt(1.0 + static_cast<double>(k) * static_cast<double>(k));
    double growth = 1.0;
    if (beta == 1.0) {
      growth = std::log(1.0 + bracket);
    } else if (beta < 1.0) {
      growth = std::pow(bracket, 1.0 - beta);
    }
    const double r = partial / growth;
    report.min_ratio = std::min(report.min_ratio, r);
    report.max_ratio = std::max(report.max_ratio, r);
  }
  return report;
}

}  // namespace fnls
