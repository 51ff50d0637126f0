#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "common.hpp"
#include "fnls/error.hpp"
#include "fnls/parallel.hpp"
#include "json_config.hpp"

int main(int argc, char** argv) {
  using namespace fnls::cli;
  CLI::App app{"Numerical experiments for the cubic fractional NLS on the torus", "fnls"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  app.config_formatter(std::make_shared<JsonConfig>());
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "JSON config; subcommand options go in a section named after it");
  app.add_option("--out", global.out, "output file (default stdout)");
  app.add_option("--seed", global.seed, "random seed")->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Action action;
  register_verify(app, global, action);
  register_simulate(app, global, action);
  register_energy(app, global, action);
  register_measure(app, global, action);
  register_report(app, global, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    fnls::parallel::set_threads(global.threads);
    return action ? action() : kExitInvalid;
  } catch (const fnls::BlowupDetected& e) {
    std::cerr << "fnls: blowup detected at t = " << e.time() << '\n';
    return kExitBlowup;
  } catch (const fnls::DegenerateEstimator& e) {
    std::cerr << "fnls: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const fnls::Error& e) {
    std::cerr << "fnls: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "fnls: " << e.what() << '\n';
    return kExitInvalid;
  }
}
