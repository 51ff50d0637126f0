#include <cmath>
#include <fstream>
#include <optional>
#include <string>

#include "common.hpp"
#include "csv.hpp"
#include "fnls/error.hpp"
#include "fnls/measure.hpp"
#include "fnls/norms.hpp"

namespace fnls::cli {
namespace {

struct SimulateOptions {
  PhysicsOptions physics;
  std::string initial;
  std::uint64_t sample_index = 0;
  std::optional<double> mass;
  int record_every = 10;
  std::string trajectory;
  std::string frame = "lab";
};

SpectralField initial_state(const SimulateOptions& o, const SimParams& p, std::uint64_t seed) {
  SpectralField f = o.initial.empty() ? sample_mu(p, seed, o.sample_index) : read_field_json(o.initial);
  if (f.cutoff() < p.N) f = f.resized(p.N);
  if (o.mass) {
    if (!(*o.mass > 0.0)) throw InvalidParameter("--mass must be positive");
    const double m = mass(f);
    if (m == 0.0) throw InvalidParameter("cannot rescale the zero field to a positive mass");
    f *= Complex{std::sqrt(*o.mass / m), 0.0};
  }
  return f;
}

int run(const SimulateOptions& o, const GlobalOptions& g) {
  SimParams p = o.physics.params();
  const SpectralField f0 = initial_state(o, p, g.seed);
  if (!o.physics.dt) {
    p.dt = std::min(suggested_dt(f0), p.horizon);
    p.validate();
  }
  const Trajectory tr = evolve(f0, p, o.record_every);

  if (!o.trajectory.empty()) {
    std::ofstream out(o.trajectory, std::ios::binary);
    if (!out) throw InvalidParameter("cannot open trajectory file " + o.trajectory);
    const bool interaction = o.frame == "interaction";
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      const double t = tr.times[k];
      const SpectralField state =
          interaction ? linear_propagator(tr.states[k], -t, p.alpha) : tr.states[k];
      out << field_json_line(t, o.frame.c_str(), state) << '\n';
    }
  }

  const double m0 = mass(tr.states.front());
  const double h0 = hamiltonian(tr.states.front(), p);
  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-simulate/1",
                {"time", "mass", "hamiltonian", "mass_drift", "energy_drift"});
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const double m = mass(tr.states[k]);
    const double h = hamiltonian(tr.states[k], p);
    csv.row({fmt(tr.times[k]), fmt(m), fmt(h), fmt(std::abs(m - m0) / std::max(1.0, std::abs(m0))),
             fmt(std::abs(h - h0) / std::max(1.0, std::abs(h0)))});
  }
  return kExitOk;
}

}  // namespace

void register_simulate(CLI::App& app, const GlobalOptions& g, Action& action) {
  auto opts = std::make_shared<SimulateOptions>();
  CLI::App* sub = app.add_subcommand("simulate", "integrate the truncated gauged flow");
  add_physics_options(*sub, opts->physics, true);
  sub->add_option("--initial", opts->initial, "JSON file with initial coefficients")
      ->check(CLI::ExistingFile);
  sub->add_option("--sample-index", opts->sample_index,
                  "index of the mu_s sample used when no initial file is given")
      ->capture_default_str();
  sub->add_option("--mass", opts->mass, "rescale the initial data to this L2 mass");
  sub->add_option("--record-every", opts->record_every, "steps between recorded states")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--trajectory", opts->trajectory, "JSON-lines trajectory output");
  sub->add_option("--frame", opts->frame, "frame of the trajectory output")
      ->check(CLI::IsMember({"lab", "interaction"}))
      ->capture_default_str();
  sub->callback([opts, &g, &action] { action = [opts, &g] { return run(*opts, g); }; });
}

}  // namespace fnls::cli
