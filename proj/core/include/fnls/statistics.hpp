#pragma once

#include <span>
#include <vector>

namespace fnls {

// A Monte-Carlo estimate with its standard error.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;

  // Normal-approximation confidence bounds at z standard errors.
  double lower(double z = 1.959963984540054) const { return value - z * std_error; }
  double upper(double z = 1.959963984540054) const { return value + z * std_error; }
};

// Sample mean with standard error sd / sqrt(M).
Estimate mean_estimate(std::span<const double> values);

// Self-normalized power mean (sum w_k x_k^p / sum w_k)^{1/p}, with a
// leave-one-out jackknife standard error. Pass empty weights for the plain
// average. Throws DegenerateEstimator when there are no samples or every
// weight is zero.
Estimate weighted_power_mean(std::span<const double> values,
                             std::span<const double> weights, double p);

bool intervals_overlap(const Estimate& a, const Estimate& b);

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic two-sample KS critical value at significance `level`:
// sqrt(-ln(level/2)/2) * sqrt((n + m) / (n m)).
double ks_critical_value(std::size_t n, std::size_t m, double level);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace fnls
