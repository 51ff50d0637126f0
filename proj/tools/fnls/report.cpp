#include <string>

#include "common.hpp"
#include "fnls/measure.hpp"
#include "fnls/modified_energy.hpp"
#include "json.hpp"

namespace fnls::cli {
namespace {

struct ReportOptions {
  PhysicsOptions physics;
};

int run(const ReportOptions& o, const GlobalOptions& g, const CLI::App& root) {
  const SimParams p = o.physics.params();
  nlohmann::ordered_json doc;
  doc["schema"] = "fnls-report/1";
  doc["params"] = {{"alpha", p.alpha}, {"s", p.s},     {"eps", p.eps},        {"N", p.N},
                   {"sign", p.sign},   {"dt", p.dt},   {"horizon", p.horizon}};
  doc["seed"] = g.seed;
  doc["threads"] = g.threads;
  doc["derived"] = {{"sigma", p.sigma()},
                    {"energy_regime", to_string(energy_estimate_regime(p.alpha, p.s))},
                    {"expected_mass", expected_mass(p)},
                    {"default_radius", default_radius(p)}};
  doc["config"] = nlohmann::json::parse(root.config_to_str(true, false));
  OutputSink sink(g.out);
  sink.stream() << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

void register_report(CLI::App& app, const GlobalOptions& g, Action& action) {
  auto opts = std::make_shared<ReportOptions>();
  CLI::App* sub = app.add_subcommand("report", "print the resolved parameters and derived quantities");
  add_physics_options(*sub, opts->physics, true);
  sub->callback([opts, &g, &action, &app] { action = [opts, &g, &app] { return run(*opts, g, app); }; });
}

}  // namespace fnls::cli
