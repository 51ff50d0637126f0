#include "fnls/measure.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "fnls/error.hpp"
#include "fnls/modified_energy.hpp"
#include "fnls/norms.hpp"
#include "fnls/parallel.hpp"
#include "fnls/random.hpp"

namespace fnls {

SpectralField sample_mu(const SimParams& p, std::uint64_t seed, std::uint64_t index) {
  SpectralField f(p.N);
  for (int n = -p.N; n <= p.N; ++n) {
    const auto [a, b] = keyed_normal_pair(seed, index, n);
    f[n] = Complex{a, b} / std::pow(japanese(n), p.s);
  }
  return f;
}

Ensemble::Ensemble(SimParams params, std::uint64_t seed, int size)
    : params_(params), seed_(seed), size_(size) {
  if (size < 0) throw InvalidParameter("ensemble size must be >= 0");
}

SpectralField Ensemble::sample(int k) const {
  return sample_mu(params_, seed_, static_cast<std::uint64_t>(k));
}

double expected_mass(const SimParams& p) {
  double sum = 0.0;
  for (int n = -p.N; n <= p.N; ++n) sum += 2.0 * std::pow(japanese(n), -2.0 * p.s);
  return sum;
}

double default_radius(const SimParams& p) { return 3.0 * std::sqrt(expected_mass(p)); }

DensityValue density_F(const SpectralField& f, const SimParams& p, double r) {
  DensityValue out;
  out.indicator = physical_lp(f, 2) <= r ? 1 : 0;
  out.weight = std::exp(-0.5 * correction_R(f, p.s, p.alpha, p.N));
  return out;
}

Statistic Statistic::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InvalidParameter("statistic must look like kind:value, got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  double value = 0.0;
  try {
    value = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw InvalidParameter("bad statistic parameter in '" + text + "'");
  }
  Statistic stat;
  stat.param = value;
  if (kind == "fl_norm") {
    stat.kind = Kind::fl_norm;
  } else if (kind == "sobolev_norm") {
    stat.kind = Kind::sobolev_norm;
  } else if (kind == "abs_coeff") {
    stat.kind = Kind::abs_coeff;
  } else if (kind == "l2_block") {
    stat.kind = Kind::l2_block;
    if (value < 1) throw InvalidParameter("l2_block needs a length >= 1");
  } else {
    throw InvalidParameter("unknown statistic '" + kind + "'");
  }
  return stat;
}

std::string Statistic::name() const {
  std::string prefix;
  switch (kind) {
    case Kind::fl_norm: prefix = "fl_norm"; break;
    case Kind::sobolev_norm: prefix = "sobolev_norm"; break;
    case Kind::abs_coeff: return "abs_coeff:" + std::to_string(static_cast<int>(param));
    case Kind::l2_block: return "l2_block:" + std::to_string(static_cast<int>(param));
  }
  std::string value = std::to_string(param);
  value.erase(value.find_last_not_of('0') + 1);
  if (!value.empty() && value.back() == '.') value.pop_back();
  return prefix + ":" + value;
}

double Statistic::evaluate(const SpectralField& f, double s) const {
  switch (kind) {
    case Kind::fl_norm:
      return fourier_lebesgue_norm(f, SobolevIndex{param}, kInfinity);
    case Kind::sobolev_norm:
      return sobolev_norm(f, SobolevIndex{param});
    case Kind::abs_coeff:
      return std::abs(f.at(static_cast<int>(param)));
    case Kind::l2_block: {
      double sum = 0.0;
      const int block = static_cast<int>(param);
      for (int n = 1; n <= block; ++n) sum += std::pow(japanese(n), 2.0 * s) * std::norm(f.at(n));
      return std::sqrt(sum);
    }
  }
  return 0.0;
}

namespace {

SimParams with_cutoff(SimParams p, int N) {
  p.N = N;
  return p;
}

// F_{N,r}(f), skipping the correction when the indicator vanishes.
double density_value(const SpectralField& f, const SimParams& p, double r) {
  if (physical_lp(f, 2) > r) return 0.0;
  return density_F(f, p, r).value();
}

int density_cutoff(const DensitySpec& d, const Ensemble& e) {
  const int N = d.N > 0 ? d.N : e.params().N;
  if (N > e.params().N) throw InvalidParameter("density cutoff exceeds ensemble cutoff");
  return N;
}

}  // namespace

Estimate lp_moment(const Statistic& stat, double p, const Ensemble& e,
                   const std::optional<DensitySpec>& density) {
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  struct Pair {
    double value;
    double weight;
  };
  const double s = e.params().s;
  std::optional<SimParams> dparams;
  if (density) dparams = with_cutoff(e.params(), density_cutoff(*density, e));
  auto per_sample = parallel::map_indexed(e.size(), [&](int k) {
    const SpectralField f = e.sample(k);
    Pair out{stat.evaluate(f, s), 1.0};
    if (dparams) out.weight = density_value(f, *dparams, density->r);
    return out;
  });
  std::vector<double> values, weights;
  values.reserve(per_sample.size());
  for (const auto& pr : per_sample) values.push_back(pr.value);
  if (density) {
    for (const auto& pr : per_sample) weights.push_back(pr.weight);
  }
  return weighted_power_mean(values, weights, p);
}

Estimate density_norm(const Ensemble& e, const DensitySpec& density, double q) {
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  const SimParams dparams = with_cutoff(e.params(), density_cutoff(density, e));
  auto values = parallel::map_indexed(e.size(), [&](int k) {
    return density_value(e.sample(k), dparams, density.r);
  });
  return weighted_power_mean(values, {}, q);
}

MomentGrowth moment_growth(const Statistic& stat, const std::vector<double>& orders,
                           const Ensemble& e, const std::optional<DensitySpec>& density) {
  if (orders.size() < 2) throw InvalidParameter("moment_growth needs >= 2 orders");
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  const double s = e.params().s;
  std::optional<SimParams> dparams;
  if (density) dparams = with_cutoff(e.params(), density_cutoff(*density, e));
  std::vector<double> values(static_cast<std::size_t>(e.size()));
  std::vector<double> weights;
  if (density) weights.resize(values.size());
  auto per_sample = parallel::map_indexed(e.size(), [&](int k) {
    const SpectralField f = e.sample(k);
    const double w = dparams ? density_value(f, *dparams, density->r) : 1.0;
    return std::pair{stat.evaluate(f, s), w};
  });
  for (std::size_t k = 0; k < per_sample.size(); ++k) {
    values[k] = per_sample[k].first;
    if (density) weights[k] = per_sample[k].second;
  }
  MomentGrowth out;
  out.orders = orders;
  std::vector<double> log_p, log_norm;
  for (double p : orders) {
    out.norms.push_back(weighted_power_mean(values, weights, p));
    log_p.push_back(std::log(p));
    log_norm.push_back(std::log(out.norms.back().value));
  }
  out.exponent = least_squares(log_p, log_norm).slope;
  return out;
}

TailFit tail_fit(int block, const std::vector<double>& thresholds, const Ensemble& e) {
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  Statistic stat{Statistic::Kind::l2_block, static_cast<double>(block)};
  const double s = e.params().s;
  auto values = parallel::map_indexed(e.size(), [&](int k) {
    return stat.evaluate(e.sample(k), s);
  });
  TailFit fit;
  fit.thresholds = thresholds;
  fit.c_bound = std::numeric_limits<double>::infinity();
  std::vector<double> k2, logp;
  for (double K : thresholds) {
    const auto hits = std::count_if(values.begin(), values.end(),
                                    [K](double v) { return v >= K; });
    const double prob = static_cast<double>(hits) / static_cast<double>(values.size());
    fit.probabilities.push_back(prob);
    if (prob > 0.0) {
      fit.c_bound = std::min(fit.c_bound, -std::log(prob) / (K * K));
      k2.push_back(K * K);
      logp.push_back(std::log(prob));
    }
  }
  if (k2.empty()) throw DegenerateEstimator("no sample reaches any tail threshold");
  fit.c_fit = k2.size() >= 2 ? -least_squares(k2, logp).slope : fit.c_bound;
  return fit;
}

std::vector<ConvergenceRow> r_convergence(const SimParams& p, const Ensemble& e,
                                          const std::vector<int>& N_list,
                                          double p_norm) {
  if (N_list.empty()) throw InvalidParameter("r_convergence: empty N list");
  if (!std::is_sorted(N_list.begin(), N_list.end()) ||
      std::adjacent_find(N_list.begin(), N_list.end()) != N_list.end()) {
    throw InvalidParameter("r_convergence: N list must be strictly ascending");
  }
  if (N_list.front() < 1 || N_list.back() > e.params().N) {
    throw InvalidParameter("r_convergence: N list outside the sampler cutoff");
  }
  if (N_list.size() == 1) return {};
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  const int n_max = N_list.back();
  const std::size_t rows = N_list.size() - 1;
  auto diffs = parallel::map_indexed(e.size(), [&](int k) {
    const SpectralField f = e.sample(k);
    const double top = correction_R(f, p.s, p.alpha, n_max);
    std::vector<double> d(rows);
    for (std::size_t j = 0; j < rows; ++j) {
      d[j] = correction_R(f, p.s, p.alpha, N_list[j]) - top;
    }
    return d;
  });
  std::vector<ConvergenceRow> out;
  std::vector<double> column(diffs.size());
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t k = 0; k < diffs.size(); ++k) column[k] = diffs[k][j];
    out.push_back({N_list[j], weighted_power_mean(column, {}, p_norm)});
  }
  return out;
}

double flow_jacobian_det(const SpectralField& f0, const SimParams& p, double t) {
  if (p.N > 4) throw UnsupportedDimension("flow_jacobian_det supports N <= 4");
  if (f0.cutoff() != p.N) throw InvalidParameter("flow_jacobian_det: cutoff mismatch");
  // Phi_N(0) is the identity map.
  if (t == 0.0) return 1.0;
  constexpr double h = 1e-5;
  const int modes = 2 * p.N + 1;
  const int dim = 2 * modes;
  Eigen::MatrixXd jac(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int mode = col / 2 - p.N;
    const Complex dir = (col % 2 == 0) ? Complex{h, 0.0} : Complex{0.0, h};
    SpectralField plus = f0;
    SpectralField minus = f0;
    plus[mode] += dir;
    minus[mode] -= dir;
    const SpectralField diff = flow(plus, p, t) - flow(minus, p, t);
    for (int m = -p.N; m <= p.N; ++m) {
      const int row = 2 * (m + p.N);
      jac(row, col) = diff[m].real() / (2.0 * h);
      jac(row + 1, col) = diff[m].imag() / (2.0 * h);
    }
  }
  return jac.partialPivLu().determinant();
}

bool SetSpec::contains(const SpectralField& v) const {
  if (halfspace_mode && v.at(*halfspace_mode).real() < 0.0) return false;
  if (radius >= kSetUnbounded) return true;
  const SpectralField offset = center ? v - center->resized(v.cutoff()) : v;
  return sobolev_norm(offset, SobolevIndex{sigma}) <= radius;
}

PushforwardResult pushforward_check(const SetSpec& A, const SimParams& p, double r,
                                    double t, const Ensemble& e) {
  if (e.params().N != p.N) {
    throw InvalidParameter("pushforward_check needs the ensemble cutoff to equal N");
  }
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  struct Contribution {
    double lhs = 0.0;
    double rhs = 0.0;
  };
  auto per_sample = parallel::map_indexed(e.size(), [&](int k) {
    const SpectralField v = e.sample(k);
    Contribution c;
    if (physical_lp(v, 2) > r) return c;
    const double weight = std::exp(-0.5 * correction_R(v, p.s, p.alpha, p.N));
    if (A.contains(flow(v, p, -t))) c.lhs = weight;
    if (A.contains(v)) {
      const double hs = sobolev_norm(v, SobolevIndex{p.s});
      const double energy = energy_E(flow(v, p, t), p.s, p.alpha, p.N).total;
      c.rhs = std::exp(-0.5 * energy + 0.5 * hs * hs);
    }
    return c;
  });
  std::vector<double> lhs, rhs;
  PushforwardResult out;
  for (const auto& c : per_sample) {
    lhs.push_back(c.lhs);
    rhs.push_back(c.rhs);
    if (c.lhs > 0.0 || c.rhs > 0.0) ++out.effective_samples;
    out.max_sample_gap = std::max(out.max_sample_gap, std::abs(c.lhs - c.rhs));
  }
  if (out.effective_samples == 0) {
    throw DegenerateEstimator("no sample falls in A within the mass ball");
  }
  out.lhs = mean_estimate(lhs);
  out.rhs = mean_estimate(rhs);
  out.ratio = out.rhs.value > 0.0 ? out.lhs.value / out.rhs.value
                                  : std::numeric_limits<double>::infinity();
  out.overlap = intervals_overlap(out.lhs, out.rhs);
  return out;
}

GaugeInvarianceReport gauge_invariance_check(const SimParams& p, double t,
                                             const Ensemble& e) {
  if (!(p.s > 0.5)) throw InvalidParameter("gauge invariance check requires s > 1/2");
  if (e.size() == 0) throw DegenerateEstimator("empty ensemble");
  const int top = std::min(3, e.params().N);
  struct Battery {
    std::vector<double> before, after;
  };
  // One battery entry per statistic: |u_n|^2 for |n| <= top, then the L^2
  // norm, then Re u_1.
  std::vector<std::string> names;
  for (int n = -top; n <= top; ++n) names.push_back("abs2_coeff:" + std::to_string(n));
  names.emplace_back("l2_norm");
  names.emplace_back("re_coeff:1");
  auto evaluate = [&](const SpectralField& f) {
    std::vector<double> out;
    for (int n = -top; n <= top; ++n) out.push_back(std::norm(f.at(n)));
    out.push_back(physical_lp(f, 2));
    out.push_back(f.at(1).real());
    return out;
  };
  auto per_sample = parallel::map_indexed(e.size(), [&](int k) {
    const SpectralField f = e.sample(k);
    return std::pair{evaluate(f), evaluate(gauge_forward(f, t))};
  });
  GaugeInvarianceReport report;
  report.critical_value = ks_critical_value(per_sample.size(), per_sample.size(), 0.01);
  for (std::size_t j = 0; j < names.size(); ++j) {
    std::vector<double> a, b;
    a.reserve(per_sample.size());
    b.reserve(per_sample.size());
    for (const auto& [before, after] : per_sample) {
      a.push_back(before[j]);
      b.push_back(after[j]);
    }
    const double d = ks_two_sample(std::move(a), std::move(b));
    report.rows.push_back({names[j], d});
    report.max_distance = std::max(report.max_distance, d);
  }
  return report;
}

}  // namespace fnls
