#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "common.hpp"
#include "csv.hpp"
#include "fnls/error.hpp"
#include "fnls/measure.hpp"
#include "fnls/modified_energy.hpp"
#include "fnls/parallel.hpp"

namespace fnls::cli {
namespace {

constexpr double kFdTolerance = 1e-4;

struct EnergyOptions {
  PhysicsOptions physics;
  std::vector<int> N_list{8, 16};
  int samples = 100;
  double eps_tilde = 0.05;
};

struct SampleRow {
  double strong = 0.0;
  double weak = 0.0;
  DerivativeTerms terms;
  double fd = 0.0;
  double residual = 0.0;
};

SampleRow evaluate(const SpectralField& f, const SimParams& p, double eps_tilde) {
  SampleRow row;
  row.terms = derivative_terms(f, 0.0, p);
  row.strong = energy_ratio_strong(f, p);
  row.weak = energy_ratio_weak(f, p, eps_tilde);
  row.fd = energy_derivative_fd(f, p);
  const double scale = std::max(std::abs(row.fd), std::abs(row.terms.sum()));
  row.residual = scale == 0.0 ? 0.0 : std::abs(row.terms.sum() - row.fd) / scale;
  return row;
}

int run(const EnergyOptions& o, const GlobalOptions& g) {
  if (o.samples < 0) throw InvalidParameter("--samples must be >= 0");
  if (o.physics.sign != 1) {
    throw UnsupportedRegime("the energy decomposition assumes the defocusing sign");
  }
  std::vector<SimParams> params;
  for (int N : o.N_list) {
    PhysicsOptions po = o.physics;
    po.N = N;
    params.push_back(po.params());
  }
  if (!(o.eps_tilde > 0.0 && o.eps_tilde < o.physics.eps)) {
    throw InvalidParameter("--eps-tilde must lie in (0, eps)");
  }

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-energy/1",
                {"kind", "N", "sample", "strong_ratio", "weak_ratio", "n1", "r1", "n2", "r2",
                 "fd_derivative", "fd_residual"});
  bool ok = true;
  for (const SimParams& p : params) {
    const Ensemble ensemble(p, g.seed, o.samples);
    const auto rows = parallel::map_indexed(
        o.samples, [&](int k) { return evaluate(ensemble.sample(k), p, o.eps_tilde); });
    double max_strong = 0.0, max_weak = 0.0, max_residual = 0.0;
    for (int k = 0; k < o.samples; ++k) {
      const SampleRow& r = rows[static_cast<std::size_t>(k)];
      csv.row({"sample", fmt(p.N), fmt(k), fmt(r.strong), fmt(r.weak), fmt(r.terms.n1),
               fmt(r.terms.r1), fmt(r.terms.n2), fmt(r.terms.r2), fmt(r.fd), fmt(r.residual)});
      max_strong = std::max(max_strong, r.strong);
      max_weak = std::max(max_weak, r.weak);
      max_residual = std::max(max_residual, r.residual);
    }
    if (o.samples > 0) {
      csv.row({"max", fmt(p.N), fmt(o.samples), fmt(max_strong), fmt(max_weak), "", "", "", "",
               "", fmt(max_residual)});
    }
    ok = ok && max_residual <= kFdTolerance;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

void register_energy(CLI::App& app, const GlobalOptions& g, Action& action) {
  auto opts = std::make_shared<EnergyOptions>();
  CLI::App* sub = app.add_subcommand("energy", "scan the modified-energy derivative ratios");
  add_physics_options(*sub, opts->physics, false);
  sub->add_option("--N-list", opts->N_list, "cutoffs to scan")->delimiter(',')->capture_default_str();
  sub->add_option("--samples", opts->samples, "mu_s samples per cutoff")->capture_default_str();
  sub->add_option("--eps-tilde", opts->eps_tilde, "Fourier-Lebesgue loss in the weak ratio")
      ->capture_default_str();
  sub->callback([opts, &g, &action] { action = [opts, &g] { return run(*opts, g); }; });
}

}  // namespace fnls::cli
