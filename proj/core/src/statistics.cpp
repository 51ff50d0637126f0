#include "fnls/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "fnls/error.hpp"

namespace fnls {

Estimate mean_estimate(std::span<const double> values) {
  if (values.empty()) throw DegenerateEstimator("mean of an empty sample");
  const double m = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / m;
  if (values.size() < 2) return {mean, 0.0};
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / (m - 1.0) / m)};
}

Estimate weighted_power_mean(std::span<const double> values,
                             std::span<const double> weights, double p) {
  if (values.empty()) throw DegenerateEstimator("power mean of an empty sample");
  if (!weights.empty() && weights.size() != values.size()) {
    throw InvalidParameter("weighted_power_mean: size mismatch");
  }
  if (!(p >= 1.0)) throw InvalidParameter("weighted_power_mean: p < 1");
  const std::size_t m = values.size();
  auto weight = [&](std::size_t k) { return weights.empty() ? 1.0 : weights[k]; };

  // Powers are taken relative to the largest value to keep x^p finite for
  // large p.
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  std::vector<double> powered(m);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    powered[k] = std::pow(std::abs(values[k]) / scale, p);
    num += weight(k) * powered[k];
    den += weight(k);
  }
  if (!(den > 0.0)) throw DegenerateEstimator("all weights vanish");
  const double full = scale * std::pow(num / den, 1.0 / p);
  if (m < 2) return {full, 0.0};

  std::vector<double> loo(m);
  double loo_mean = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double n_k = num - weight(k) * powered[k];
    const double d_k = den - weight(k);
    loo[k] = d_k > 0.0 ? scale * std::pow(std::max(n_k, 0.0) / d_k, 1.0 / p) : full;
    loo_mean += loo[k];
    ++used;
  }
  loo_mean /= static_cast<double>(used);
  double sq = 0.0;
  for (double v : loo) sq += (v - loo_mean) * (v - loo_mean);
  const double md = static_cast<double>(m);
  return {full, std::sqrt((md - 1.0) / md * sq)};
}

bool intervals_overlap(const Estimate& a, const Estimate& b) {
  return a.lower() <= b.upper() && b.lower() <= a.upper();
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DegenerateEstimator("KS test on an empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double worst = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) / na -
                                     static_cast<double>(j) / nb));
  }
  return worst;
}

double ks_critical_value(std::size_t n, std::size_t m, double level) {
  const double c = std::sqrt(-0.5 * std::log(0.5 * level));
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidParameter("least_squares needs >= 2 paired points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw InvalidParameter("least_squares: degenerate abscissae");
  const double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

}  // namespace fnls
