#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "csv.hpp"
#include "fnls/error.hpp"
#include "fnls/measure.hpp"
#include "fnls/parallel.hpp"
#include "fnls/spectral_field.hpp"

namespace fnls::cli {
namespace {

constexpr double kJacobianTolerance = 1e-5;
constexpr double kMomentZ = 3.0;

// Exact ||u_n||_{L^p(mu_s)} = Gamma(1 + p/2)^{1/p} sqrt(2) <n>^{-s}, since
// |u_n|^2 <n>^{2s} / 2 is a unit exponential variable.
double exact_abs_coeff_moment(int mode, double p, double s) {
  return std::exp(std::lgamma(1.0 + 0.5 * p) / p) * std::sqrt(2.0) * std::pow(japanese(mode), -s);
}

struct MomentsOptions {
  PhysicsOptions physics;
  std::string stat = "abs_coeff:0";
  std::vector<double> p{2.0};
  int samples = 10000;
  std::optional<double> density_r;
  std::optional<double> expect;
};

int run_moments(const MomentsOptions& o, const GlobalOptions& g) {
  const SimParams params = o.physics.params();
  const Statistic stat = Statistic::parse(o.stat);
  const Ensemble ensemble(params, g.seed, o.samples);
  std::optional<DensitySpec> density;
  if (o.density_r) density = DensitySpec{*o.density_r, params.N};

  struct Row {
    double p;
    Estimate estimate;
    std::optional<double> expected;
  };
  std::vector<Row> rows;
  for (double p : o.p) {
    if (!(p >= 1.0)) throw InvalidParameter("--p must be >= 1");
    Row row{p, lp_moment(stat, p, ensemble, density), o.expect};
    if (!row.expected && !density && stat.kind == Statistic::Kind::abs_coeff) {
      row.expected = exact_abs_coeff_moment(static_cast<int>(stat.param), p, params.s);
    }
    rows.push_back(row);
  }

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-measure-moments/1",
                {"statistic", "p", "weighted", "value", "std_error", "ci_lower", "ci_upper",
                 "expected", "pass"});
  bool ok = true;
  for (const Row& r : rows) {
    bool pass = true;
    std::string expected;
    if (r.expected) {
      pass = std::abs(r.estimate.value - *r.expected) <= kMomentZ * r.estimate.std_error;
      expected = fmt(*r.expected);
    }
    csv.row({stat.name(), fmt(r.p), fmt(density.has_value()), fmt(r.estimate.value),
             fmt(r.estimate.std_error), fmt(r.estimate.lower()), fmt(r.estimate.upper()),
             expected, fmt(pass)});
    ok = ok && pass;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct ConvergenceOptions {
  PhysicsOptions physics;
  std::vector<int> N_list{8, 16, 32, 64};
  double p = 2.0;
  int samples = 1000;
};

int run_convergence(const ConvergenceOptions& o, const GlobalOptions& g) {
  if (o.N_list.size() < 2) throw InvalidParameter("--N-list needs at least two cutoffs");
  PhysicsOptions po = o.physics;
  po.N = *std::max_element(o.N_list.begin(), o.N_list.end());
  const SimParams params = po.params();
  const Ensemble ensemble(params, g.seed, o.samples);
  const auto rows = r_convergence(params, ensemble, o.N_list, o.p);

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-measure-convergence/1",
                {"N", "N_max", "p", "difference", "std_error"});
  bool decreasing = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    csv.row({fmt(rows[k].N), fmt(params.N), fmt(o.p), fmt(rows[k].difference.value),
             fmt(rows[k].difference.std_error)});
    if (k > 0 && !(rows[k].difference.value < rows[k - 1].difference.value)) decreasing = false;
  }
  return decreasing ? kExitOk : kExitCheckFailed;
}

struct PushforwardOptions {
  PhysicsOptions physics;
  std::vector<double> t{0.2};
  std::optional<double> radius;
  int samples = 10000;
  double set_sigma = 0.0;
  std::optional<double> set_radius;
  std::string set_center;
  std::optional<int> halfspace_mode;
};

int run_pushforward(const PushforwardOptions& o, const GlobalOptions& g) {
  const SimParams params = o.physics.params();
  const double r = o.radius.value_or(default_radius(params));
  SetSpec A;
  A.sigma = o.set_sigma;
  if (o.set_radius) A.radius = *o.set_radius;
  if (!o.set_center.empty()) A.center = read_field_json(o.set_center).resized(params.N);
  A.halfspace_mode = o.halfspace_mode;
  const Ensemble ensemble(params, g.seed, o.samples);

  std::vector<std::pair<double, PushforwardResult>> rows;
  for (double t : o.t) rows.emplace_back(t, pushforward_check(A, params, r, t, ensemble));

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-measure-pushforward/1",
                {"t", "lhs", "lhs_std_error", "rhs", "rhs_std_error", "ratio", "overlap",
                 "effective_samples", "max_sample_gap"});
  bool ok = true;
  for (const auto& [t, res] : rows) {
    csv.row({fmt(t), fmt(res.lhs.value), fmt(res.lhs.std_error), fmt(res.rhs.value),
             fmt(res.rhs.std_error), fmt(res.ratio), fmt(res.overlap), fmt(res.effective_samples),
             fmt(res.max_sample_gap)});
    ok = ok && res.overlap;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct JacobianOptions {
  PhysicsOptions physics{.N = 2};
  std::vector<double> t{0.0, 0.1};
  int samples = 3;
};

int run_jacobian(const JacobianOptions& o, const GlobalOptions& g) {
  const SimParams params = o.physics.params();
  if (params.N > 4) throw UnsupportedDimension("the Jacobian check supports N <= 4");
  const int count = o.samples * static_cast<int>(o.t.size());
  const auto dets = parallel::map_indexed(count, [&](int i) {
    const int k = i / static_cast<int>(o.t.size());
    const double t = o.t[static_cast<std::size_t>(i) % o.t.size()];
    return flow_jacobian_det(sample_mu(params, g.seed, static_cast<std::uint64_t>(k)), params, t);
  });

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-measure-jacobian/1", {"sample", "t", "det", "deviation"});
  bool ok = true;
  for (int i = 0; i < count; ++i) {
    const double det = dets[static_cast<std::size_t>(i)];
    const double dev = std::abs(det - 1.0);
    csv.row({fmt(i / static_cast<int>(o.t.size())), fmt(o.t[static_cast<std::size_t>(i) % o.t.size()]),
             fmt(det), fmt(dev)});
    ok = ok && dev <= kJacobianTolerance;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct GaugeOptions {
  PhysicsOptions physics;
  double t = 0.7;
  int samples = 10000;
};

int run_gauge(const GaugeOptions& o, const GlobalOptions& g) {
  const SimParams params = o.physics.params();
  const Ensemble ensemble(params, g.seed, o.samples);
  const GaugeInvarianceReport report = gauge_invariance_check(params, o.t, ensemble);

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-measure-gauge/1",
                {"statistic", "ks_distance", "critical_value", "pass"});
  for (const KsRow& row : report.rows) {
    csv.row({row.statistic, fmt(row.distance), fmt(report.critical_value),
             fmt(row.distance <= report.critical_value)});
  }
  return report.max_distance <= report.critical_value ? kExitOk : kExitCheckFailed;
}

template <class Options>
std::shared_ptr<Options> add_experiment(CLI::App& parent, const char* name, const char* help,
                                        bool timed, CLI::App*& sub) {
  auto opts = std::make_shared<Options>();
  sub = parent.add_subcommand(name, help);
  add_physics_options(*sub, opts->physics, timed);
  sub->add_option("--samples", opts->samples, "ensemble size")->capture_default_str();
  return opts;
}

}  // namespace

void register_measure(CLI::App& app, const GlobalOptions& g, Action& action) {
  CLI::App* measure = app.add_subcommand("measure", "Monte-Carlo experiments on the Gaussian measure");
  measure->require_subcommand(1);
  CLI::App* sub = nullptr;

  auto moments = add_experiment<MomentsOptions>(*measure, "moments", "L^p moments of a statistic",
                                                false, sub);
  sub->add_option("--stat", moments->stat, "fl_norm:S, sobolev_norm:S, abs_coeff:N or l2_block:M")
      ->capture_default_str();
  sub->add_option("--p", moments->p, "moment orders")->delimiter(',')->capture_default_str();
  sub->add_option("--density-r", moments->density_r, "weight by F_{N,r} with this radius");
  sub->add_option("--expect", moments->expect, "expected value checked at 3 standard errors");
  sub->callback([moments, &g, &action] { action = [moments, &g] { return run_moments(*moments, g); }; });

  auto convergence = add_experiment<ConvergenceOptions>(
      *measure, "convergence", "Cauchy differences of the truncated correction", false, sub);
  sub->add_option("--N-list", convergence->N_list, "ascending cutoffs")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--p", convergence->p, "norm exponent")->capture_default_str();
  sub->callback([convergence, &g, &action] {
    action = [convergence, &g] { return run_convergence(*convergence, g); };
  });

  auto push = add_experiment<PushforwardOptions>(*measure, "pushforward",
                                                 "two estimators of rho(Phi(t) A)", true, sub);
  sub->add_option("--t", push->t, "flow times")->delimiter(',')->capture_default_str();
  sub->add_option("--radius", push->radius, "density radius r (default 3 (E||u||^2)^{1/2})");
  sub->add_option("--set-sigma", push->set_sigma, "Sobolev index of the ball A")->capture_default_str();
  sub->add_option("--set-radius", push->set_radius, "radius of the ball A (default unbounded)");
  sub->add_option("--set-center", push->set_center, "JSON file with the center of A")
      ->check(CLI::ExistingFile);
  sub->add_option("--halfspace-mode", push->halfspace_mode, "intersect A with {Re v_mode >= 0}");
  sub->callback([push, &g, &action] { action = [push, &g] { return run_pushforward(*push, g); }; });

  auto jac = add_experiment<JacobianOptions>(*measure, "jacobian",
                                             "determinant of the flow-map Jacobian", true, sub);
  sub->add_option("--t", jac->t, "flow times")->delimiter(',')->capture_default_str();
  sub->callback([jac, &g, &action] { action = [jac, &g] { return run_jacobian(*jac, g); }; });

  auto gauge = add_experiment<GaugeOptions>(*measure, "gauge", "KS test of gauge invariance",
                                            false, sub);
  sub->add_option("--t", gauge->t, "gauge time")->capture_default_str();
  sub->callback([gauge, &g, &action] { action = [gauge, &g] { return run_gauge(*gauge, g); }; });
}

}  // namespace fnls::cli
