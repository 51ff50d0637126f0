#include <cmath>
#include <string>
#include <vector>

#include "common.hpp"
#include "csv.hpp"
#include "fnls/lattice.hpp"

namespace fnls::cli {
namespace {

struct VerifyOptions {
  std::vector<std::string> lemmas{"phase", "dmvt", "divisor", "varphi"};
  std::vector<double> alpha{1.0};
  std::vector<double> s{1.5};
  int radius = 32;
  std::vector<double> delta{0.5};
  std::int64_t m_max = 100000;
  std::vector<double> beta{0.5, 1.0, 2.0};
  std::int64_t k_max = 10000;
};

struct Row {
  std::string lemma;
  std::string parameter;
  std::int64_t scan = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::string witness;
  bool pass = false;
};

std::string quad_text(const FrequencyQuad& q) {
  return "(" + std::to_string(q.n1) + "," + std::to_string(q.n2) + "," + std::to_string(q.n3) +
         "," + std::to_string(q.n) + ")";
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

bool selected(const VerifyOptions& o, const char* lemma) {
  for (const auto& name : o.lemmas) {
    if (name == lemma) return true;
  }
  return false;
}

int run(const VerifyOptions& o, const GlobalOptions& g) {
  std::vector<Row> rows;
  if (selected(o, "phase")) {
    for (double a : o.alpha) {
      const BoundReport r = verify_phase_lower_bound(a, o.radius);
      rows.push_back({"phase_lower_bound", "alpha=" + fmt(a), o.radius, r.min_ratio, r.max_ratio,
                      quad_text(r.argmin_quad), positive_finite(r.min_ratio)});
    }
  }
  if (selected(o, "dmvt")) {
    for (double s : o.s) {
      const BoundReport r = verify_dmvt_bound(s, o.radius);
      rows.push_back({"dmvt_bound", "s=" + fmt(s), o.radius, r.min_ratio, r.max_ratio,
                      quad_text(r.argmax_quad), positive_finite(r.max_ratio)});
    }
  }
  if (selected(o, "divisor")) {
    for (double d : o.delta) {
      const DivisorScan r = divisor_bound_scan(d, o.m_max);
      rows.push_back({"divisor_bound", "delta=" + fmt(d), o.m_max, 0.0, r.max_ratio,
                      std::to_string(r.argmax), positive_finite(r.max_ratio)});
    }
  }
  if (selected(o, "varphi")) {
    for (double b : o.beta) {
      const VarphiReport r = verify_varphi_regimes(b, o.k_max);
      rows.push_back({"varphi_growth", "beta=" + fmt(b), o.k_max, r.min_ratio, r.max_ratio, "",
                      positive_finite(r.min_ratio) && positive_finite(r.max_ratio)});
    }
  }

  OutputSink sink(g.out);
  CsvWriter csv(sink.stream(), "fnls-verify/1",
                {"lemma", "parameter", "scan_size", "min_ratio", "max_ratio", "witness", "pass"});
  bool ok = true;
  for (const auto& r : rows) {
    csv.row({r.lemma, r.parameter, fmt(static_cast<long long>(r.scan)), fmt(r.min_ratio),
             fmt(r.max_ratio), r.witness, fmt(r.pass)});
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

void register_verify(CLI::App& app, const GlobalOptions& g, Action& action) {
  auto opts = std::make_shared<VerifyOptions>();
  CLI::App* sub = app.add_subcommand("verify", "exhaustive lattice scans of the frequency bounds");
  sub->add_option("--lemmas", opts->lemmas, "subset of phase,dmvt,divisor,varphi")
      ->delimiter(',')
      ->check(CLI::IsMember({"phase", "dmvt", "divisor", "varphi"}))
      ->capture_default_str();
  sub->add_option("--alpha", opts->alpha, "dispersion exponents for the phase scan")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--s", opts->s, "regularities for the psi scan")->delimiter(',')->capture_default_str();
  sub->add_option("--radius", opts->radius, "lattice scan radius")->capture_default_str();
  sub->add_option("--delta", opts->delta, "exponents for d(m) / m^delta")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--m-max", opts->m_max, "divisor scan range")->capture_default_str();
  sub->add_option("--beta", opts->beta, "exponents for varphi_beta")->delimiter(',')->capture_default_str();
  sub->add_option("--k-max", opts->k_max, "varphi scan range")->capture_default_str();
  sub->callback([opts, &g, &action] { action = [opts, &g] { return run(*opts, g); }; });
}

}  // namespace fnls::cli
