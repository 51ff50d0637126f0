#include "common.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>

#include "fnls/error.hpp"
#include "json.hpp"

namespace fnls::cli {

SimParams PhysicsOptions::params(double fallback_dt) const {
  SimParams p;
  p.alpha = alpha;
  p.s = s;
  p.eps = eps;
  p.N = N;
  p.sign = sign;
  p.horizon = horizon;
  p.dt = dt.value_or(std::min(fallback_dt, horizon));
  p.validate();
  return p;
}

void add_physics_options(CLI::App& app, PhysicsOptions& o, bool timed) {
  app.add_option("--alpha", o.alpha, "dispersion exponent")->capture_default_str();
  app.add_option("--s", o.s, "regularity of the Gaussian measure")->capture_default_str();
  app.add_option("--eps", o.eps, "sigma = s - 1/2 - eps")->capture_default_str();
  app.add_option("--N", o.N, "Galerkin cutoff")->capture_default_str();
  app.add_option("--sign", o.sign, "+1 defocusing, -1 focusing, 0 linear")
      ->check(CLI::IsMember({-1, 0, 1}))
      ->capture_default_str();
  if (timed) {
    app.add_option("--dt", o.dt, "maximal time step");
    app.add_option("--horizon", o.horizon, "final time")->capture_default_str();
  }
}

OutputSink::OutputSink(const std::string& path) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw InvalidParameter("cannot open output file " + path);
}

std::ostream& OutputSink::stream() { return file_ ? *file_ : std::cout; }

SpectralField read_field_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParameter(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw InvalidParameter(path + ": expected an object with a \"coefficients\" array");
  }
  const auto& list = doc["coefficients"];
  if (list.size() % 2 != 1) throw InvalidParameter(path + ": need 2K+1 coefficients");
  std::vector<Complex> coeffs;
  coeffs.reserve(list.size());
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw InvalidParameter(path + ": coefficients must be [re, im] pairs");
    }
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return SpectralField(static_cast<int>(list.size() / 2), std::move(coeffs));
}

std::string field_json_line(double time, const char* frame, const SpectralField& f) {
  char buf[64];
  std::string line = "{\"time\":";
  std::snprintf(buf, sizeof buf, "%.17g", time);
  line += buf;
  line += ",\"frame\":\"";
  line += frame;
  line += "\",\"cutoff\":" + std::to_string(f.cutoff()) + ",\"coefficients\":[";
  bool first = true;
  for (const Complex& c : f.coeffs()) {
    std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", c.real(), c.imag());
    if (!first) line += ',';
    line += buf;
    first = false;
  }
  line += "]}";
  return line;
}

}  // namespace fnls::cli
