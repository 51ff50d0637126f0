#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "fnls/dynamics.hpp"
#include "fnls/spectral_field.hpp"

namespace fnls::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBlowup = 3;

// Flags owned by the top-level app and visible to every subcommand.
struct GlobalOptions {
  std::string config;
  std::string out;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Physics flags shared by most subcommands.
struct PhysicsOptions {
  double alpha = 1.0;
  double s = 1.0;
  double eps = 0.1;
  int N = 8;
  int sign = 1;
  std::optional<double> dt;
  double horizon = 1.0;

  // SimParams with dt defaulting to `fallback_dt`; validated.
  SimParams params(double fallback_dt = 1e-2) const;
};

// Registers --alpha --s --eps --N --sign, plus --dt --horizon when `timed`.
void add_physics_options(CLI::App& app, PhysicsOptions& o, bool timed);

// A subcommand body; returns the process exit code.
using Action = std::function<int()>;

// Writes to the --out file when one is given, otherwise to stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path);
  std::ostream& stream();

 private:
  std::unique_ptr<std::ofstream> file_;
};

// Reads {"coefficients": [[re, im], ...]} with 2K+1 entries ordered from
// mode -K to K.
SpectralField read_field_json(const std::string& path);

// One JSON line: {"time": t, "frame": ..., "cutoff": K, "coefficients": [[re, im], ...]}.
std::string field_json_line(double time, const char* frame, const SpectralField& f);

// Subcommand registration. Each sets `action` when its subcommand is selected.
void register_verify(CLI::App& app, const GlobalOptions& g, Action& action);
void register_simulate(CLI::App& app, const GlobalOptions& g, Action& action);
void register_energy(CLI::App& app, const GlobalOptions& g, Action& action);
void register_measure(CLI::App& app, const GlobalOptions& g, Action& action);
void register_report(CLI::App& app, const GlobalOptions& g, Action& action);

}  // namespace fnls::cli
