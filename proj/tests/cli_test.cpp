#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path dir = fs::temp_directory_path() / ("fnls_cli_" + std::string(info->name()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string command = std::string(FNLS_CLI_PATH) + " " + args + " 2>" + err.string();
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = slurp(err);
  return result;
}

// Data rows of a CSV produced by the CLI: schema comment and header dropped.
std::vector<std::vector<std::string>> data_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  int index = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (index++ < 2) continue;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

std::string single_mode_file(double amplitude) {
  const fs::path path = scratch_dir() / "initial.json";
  std::ofstream out(path);
  out << "{\"coefficients\": [[0,0],[0,0],[0,0],[0,0],[0,0],[" << amplitude
      << ",0],[0,0],[0,0],[0,0]]}";
  return path.string();
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

TEST(Cli, MissingSubcommandIsInvalid) { EXPECT_EQ(run("").code, 2); }

TEST(Cli, VerifyAlphaOnePhaseRowIsTwo) {
  const RunResult r = run("verify --alpha 1 --radius 32 --lemmas phase");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# schema: fnls-verify/1\r\n", 0), 0u);
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][0], "phase_lower_bound");
  EXPECT_EQ(std::stod(rows[0][3]), 2.0);
  EXPECT_EQ(rows[0][6], "1");
}

TEST(Cli, VerifyAlphaTwoRadius64) {
  const RunResult r = run("verify --alpha 2 --radius 64 --lemmas phase");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GT(std::stod(rows[0][3]), 0.0);
}

TEST(Cli, VerifyDefaultLemmasPass) {
  const RunResult r = run("verify --radius 16");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(data_rows(r.out).size(), 6u);
}

TEST(Cli, VerifyRejectsUnsupportedRegimes) {
  EXPECT_EQ(run("verify --alpha 0.4").code, 2);
  EXPECT_EQ(run("verify --lemmas dmvt --s 1").code, 2);
  EXPECT_EQ(run("verify --lemmas nonsense").code, 2);
}

TEST(Cli, EnergyZeroSamplesIsHeaderOnly) {
  const RunResult r = run("energy --samples 0");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "# schema: fnls-energy/1\r\n"
            "kind,N,sample,strong_ratio,weak_ratio,n1,r1,n2,r2,fd_derivative,fd_residual\r\n");
}

TEST(Cli, EnergyIsDeterministicAcrossRunsAndThreads) {
  const std::string args = "energy --N-list 8,16 --samples 4 --seed 11";
  const RunResult a = run(args);
  const RunResult b = run(args);
  const RunResult c = run("--threads 3 " + args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto rows = data_rows(a.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[4][0], "max");
  EXPECT_LE(std::stod(rows[4][10]), 1e-4);
}

TEST(Cli, EnergyRejectsFocusingSign) { EXPECT_EQ(run("energy --sign -1 --samples 1").code, 2); }

TEST(Cli, SimulateSingleModeMatchesClosedForm) {
  const double c = 0.5;
  const fs::path traj = scratch_dir() / "traj.jsonl";
  const RunResult r = run("simulate --N 4 --initial " + single_mode_file(c) +
                          " --dt 1e-3 --horizon 1 --record-every 250 --trajectory " + traj.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& row : rows) {
    EXPECT_LE(std::stod(row[3]), 1e-9);
    EXPECT_LE(std::stod(row[4]), 1e-9);
  }
  std::ifstream in(traj);
  std::string line, last;
  int lines = 0;
  while (std::getline(in, line)) {
    last = line;
    ++lines;
  }
  EXPECT_EQ(lines, 5);
  // Final state: mode 1 equals c e^{i (1 + c^2)}; pair 5 of 9, counting from 0.
  std::string pairs = last.substr(last.find("\"coefficients\":[") + 16);
  for (int k = 0; k < 6; ++k) pairs = pairs.substr(pairs.find('[') + 1);
  double re = 0.0, im = 0.0;
  ASSERT_EQ(std::sscanf(pairs.c_str(), "%lf,%lf", &re, &im), 2);
  const std::complex<double> expected = std::polar(c, 1.0 + c * c);
  EXPECT_NEAR(re, expected.real(), 1e-9);
  EXPECT_NEAR(im, expected.imag(), 1e-9);
}

TEST(Cli, SimulateDriftShrinksAtHigherOrderWhenDtHalves) {
  const std::string base = "simulate --N 8 --mass 1 --record-every 100000 --dt ";
  const RunResult coarse = run(base + "1e-2");
  const RunResult fine = run(base + "5e-3");
  ASSERT_EQ(coarse.code, 0) << coarse.err;
  ASSERT_EQ(fine.code, 0) << fine.err;
  const double order = std::log2(std::stod(data_rows(coarse.out).back()[4]) /
                                 std::stod(data_rows(fine.out).back()[4]));
  EXPECT_GT(order, 3.5);
  EXPECT_LT(order, 5.5);
}

TEST(Cli, SimulateBlowupExitsThree) {
  const RunResult r = run("simulate --N 4 --sign -1 --dt 1e-2 --initial " + single_mode_file(30.0));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("blowup detected at t = "), std::string::npos);
}

TEST(Cli, SimulateRejectsMissingInitialFile) {
  EXPECT_EQ(run("simulate --initial /nonexistent/initial.json").code, 2);
}

TEST(Cli, MeasureJacobianAtTimeZero) {
  const RunResult r = run("measure jacobian --N 1 --t 0");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) EXPECT_EQ(std::stod(row[2]), 1.0);
}

TEST(Cli, MeasureJacobianRejectsLargeCutoff) {
  EXPECT_EQ(run("measure jacobian --N 5").code, 2);
}

TEST(Cli, MeasurePushforwardAtTimeZero) {
  const RunResult r = run("measure pushforward --N 2 --alpha 2 --t 0 --samples 500");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(std::stod(rows[0][5]), 1.0, 1e-12);
}

TEST(Cli, MeasureMomentsAbsCoeffZero) {
  const RunResult r = run("measure moments --p 2 --stat abs_coeff:0");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out);
  ASSERT_EQ(rows.size(), 1u);
  const double value = std::stod(rows[0][3]);
  const double se = std::stod(rows[0][4]);
  EXPECT_LE(std::abs(value - std::sqrt(2.0)), 3.0 * se);
}

TEST(Cli, MeasureMomentsFailedExpectationExitsOne) {
  EXPECT_EQ(run("measure moments --p 2 --stat abs_coeff:0 --samples 2000 --expect 5").code, 1);
}

TEST(Cli, MeasureConvergenceDecreases) {
  const RunResult r = run("measure convergence --samples 100 --N-list 4,8,16");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(data_rows(r.out).size(), 2u);
}

TEST(Cli, MeasureGaugePasses) {
  const RunResult r = run("measure gauge --samples 2000");
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST(Cli, OutWritesFile) {
  const fs::path out = scratch_dir() / "verify.csv";
  const RunResult r = run("--out " + out.string() + " verify --lemmas phase --radius 4");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(out).rfind("# schema: fnls-verify/1", 0), 0u);
}

TEST(Cli, ConfigFileWithFlagOverrides) {
  const fs::path cfg = scratch_dir() / "config.json";
  std::ofstream(cfg) << R"({"seed": 7, "report": {"alpha": 2, "s": 0.8, "N": 16}})";
  const RunResult r = run("--config " + cfg.string() + " report --N 32");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"alpha\": 2.0"), std::string::npos);
  EXPECT_NE(r.out.find("\"N\": 32"), std::string::npos);
  EXPECT_NE(r.out.find("\"seed\": 7"), std::string::npos);
}

TEST(Cli, ConfigRejectsUnknownKeys) {
  const fs::path cfg = scratch_dir() / "config.json";
  std::ofstream(cfg) << R"({"report": {"alpah": 2}})";
  EXPECT_EQ(run("--config " + cfg.string() + " report").code, 2);
}

TEST(Cli, ReportOutputRoundTripsAsConfig) {
  const fs::path cfg = scratch_dir() / "report.json";
  const RunResult r = run("report --alpha 1.5");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto start = r.out.find("\"config\": ");
  ASSERT_NE(start, std::string::npos);
  std::string config = r.out.substr(start + 10);
  config = config.substr(0, config.rfind('}'));
  std::ofstream(cfg) << config;
  const RunResult again = run("--config " + cfg.string() + " report");
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_NE(again.out.find("\"alpha\": 1.5"), std::string::npos);
}

}  // namespace
