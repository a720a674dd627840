#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "commands.hpp"
#include "config.hpp"
#include "output.hpp"

using namespace nperiod;
using namespace nperiod::cli;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("nperiod_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path out(const std::string& name) const { return dir_ / name; }

  int run(const std::string& command, const RunConfig& config, const std::string& name) {
    std::ostringstream err;
    const int code = run_command(command, config, out(name), err);
    last_error_ = err.str();
    return code;
  }

  fs::path dir_;
  std::string last_error_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> report(const fs::path& p) {
  std::map<std::string, std::string> kv;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return kv;
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream s(line);
    for (std::string cell; std::getline(s, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

RunConfig small(const std::string& name) {
  RunConfig c;
  c.problem.name = name;
  c.problem.grid = {16, 32, 33};
  return c;
}

RunConfig example(double a0, double a1, double L) {
  RunConfig c = small("example51");
  c.problem.tau = 0.3;
  c.problem.xi = 0.2;
  c.problem.convention = Convention::Literal;
  c.problem.constants.a0 = a0;
  c.problem.constants.a1 = a1;
  c.problem.constants.L = L;
  c.problem.constants.K = 1.0;
  return c;
}

}  // namespace

TEST(Config, ParsesSectionsAndRoundTrips) {
  const RunConfig c = parse_config(R"(
# comment
[problem]
name = example51
omega = 2.5   # trailing comment
recipe = 1 0.5 1 0.25 0; 3 0 2 0.1 0.2
convention = literal
[constants]
a0 = 0.01
gamma = 0.3
[grid]
modes = 8
[solve]
initial = random
seed = 42
)");
  EXPECT_EQ(c.problem.name, "example51");
  EXPECT_EQ(c.problem.omega, 2.5);
  ASSERT_EQ(c.problem.recipe.size(), 2u);
  EXPECT_EQ(c.problem.recipe[1].mode, 3u);
  EXPECT_EQ(c.problem.recipe[1].cos_amp, 0.2);
  EXPECT_EQ(c.problem.convention, Convention::Literal);
  EXPECT_EQ(*c.problem.constants.gamma, 0.3);
  EXPECT_EQ(c.problem.grid.modes, 8u);
  EXPECT_EQ(c.initial, InitialGuess::Random);
  EXPECT_EQ(c.seed, 42u);

  const std::string text = render_config(c);
  EXPECT_EQ(render_config(parse_config(text)), text);
}

TEST(Config, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("[problem]\nomega = 1\nbogus = 2\n"), 3u);
  EXPECT_EQ(line_of("[nowhere]\n"), 1u);
  EXPECT_EQ(line_of("omega = 1\n"), 1u);
  EXPECT_EQ(line_of("[grid]\n\nmodes = -3\n"), 3u);
  EXPECT_EQ(line_of("[problem]\nomega = abc\n"), 2u);
  EXPECT_EQ(line_of("[problem]\nconvention = both\n"), 2u);
  EXPECT_EQ(line_of("[problem]\nrecipe = 1 2 3\n"), 2u);
  EXPECT_EQ(line_of("[problem]\nomega\n"), 2u);
  RunConfig scratch;
  EXPECT_THROW(set_value(scratch, "grid.nothing", "1"), ConfigError);
}

TEST(Config, KeyListCoversEveryRenderedKey) {
  const std::string keys = describe_keys();
  std::istringstream in(render_config(RunConfig{}));
  std::string section;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    if (line.front() == '[') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const std::string key = section + "." + line.substr(0, line.find(" = "));
    EXPECT_NE(keys.find(key), std::string::npos) << key;
  }
}

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(run("check", example(0.01, 0.01, 0.01), "pass"), kExitOk);
  auto r = report(out("pass") / "report.txt");
  EXPECT_EQ(r["F3.verdict"], "PASS");
  EXPECT_NEAR(std::stod(r["F3.margin"]), 0.642, 1e-3);
  EXPECT_EQ(r["mild_solution"], "PASS");
  EXPECT_TRUE(fs::exists(out("pass") / "effective.cfg"));

  EXPECT_EQ(run("check", example(0, 0, 0), "zero"), kExitOk);
  EXPECT_EQ(run("check", example(0, 0, 0.8), "fail"), kExitFail);
  EXPECT_EQ(report(out("fail") / "report.txt")["F3.verdict"], "FAIL");

  RunConfig general = small("heat_decay");
  general.problem.constants.growth = GrowthBound::General;
  EXPECT_EQ(run("check", general, "unknown"), kExitUnknown);

  RunConfig invalid = small("heat_decay");
  invalid.problem.alpha = 0.0;
  EXPECT_EQ(run("check", invalid, "invalid"), kExitConfig);
  EXPECT_NE(last_error_.find("alpha"), std::string::npos);
}

TEST_F(CliTest, SolveHeatDecayIsZero) {
  ASSERT_EQ(run("solve", small("heat_decay"), "heat"), kExitOk);
  const auto rows = read_csv(out("heat") / "solution.csv");
  ASSERT_EQ(rows.size(), 32u * 32u);
  for (const auto& row : rows) EXPECT_EQ(row[2], 0.0);
}

TEST_F(CliTest, SolveConstantForcingIsTheSteadyProfile) {
  ASSERT_EQ(run("solve", small("constant_forcing"), "cf"), kExitOk);
  const auto rows = read_csv(out("cf") / "solution.csv");
  ASSERT_EQ(rows.size(), 32u * 32u);
  EXPECT_EQ(rows[0][0], 0.0);
  EXPECT_EQ(rows[32][0], 1.0 / 32.0);  // t-major order
  for (const auto& row : rows) {
    EXPECT_NEAR(row[2], std::sqrt(2.0) * std::sin(kPi * row[1]) / (kPi * kPi), 1e-14);
  }
}

TEST_F(CliTest, SolveManufacturedMatchesExactSolution) {
  RunConfig c = small("manufactured_linear");
  c.problem.tau = 0.3;
  c.problem.xi = 0.2;
  c.problem.g_profile = GProfile::Parabola;
  c.problem.g_scale = 0.01;
  ASSERT_EQ(run("solve", c, "m"), kExitOk);
  for (const auto& row : read_csv(out("m") / "solution.csv")) {
    const double exact =
        (0.5 + 0.25 * std::sin(2 * kPi * row[0])) * std::sqrt(2.0) * std::sin(kPi * row[1]);
    EXPECT_NEAR(row[2], exact, 1e-6);
  }
  EXPECT_LE(std::stod(report(out("m") / "report.txt")["error_vs_exact"]), 1e-6);
}

TEST_F(CliTest, SolveIsDeterministicAndConfigRoundTrips) {
  RunConfig c = example(0.3, 0.2, 0.1);
  c.initial = InitialGuess::Random;
  c.seed = 9;
  ASSERT_EQ(run("solve", c, "a"), kExitOk);
  ASSERT_EQ(run("solve", c, "b"), kExitOk);
  EXPECT_EQ(slurp(out("a") / "solution.csv"), slurp(out("b") / "solution.csv"));
  EXPECT_EQ(slurp(out("a") / "report.txt"), slurp(out("b") / "report.txt"));

  const RunConfig echoed = load_config((out("a") / "effective.cfg").string());
  ASSERT_EQ(run("solve", echoed, "c"), kExitOk);
  EXPECT_EQ(slurp(out("a") / "solution.csv"), slurp(out("c") / "solution.csv"));
  EXPECT_EQ(slurp(out("a") / "report.txt"), slurp(out("c") / "report.txt"));
}

TEST_F(CliTest, SolveNonConvergenceWritesPartialOutputs) {
  RunConfig c = example(0.3, 0.2, 0.1);
  c.max_iter = 2;
  EXPECT_EQ(run("solve", c, "partial"), kExitFail);
  EXPECT_TRUE(fs::exists(out("partial") / "solution.csv"));
  const auto r = report(out("partial") / "report.txt");
  EXPECT_EQ(r.at("status"), "max_iterations");
  EXPECT_EQ(r.at("converged"), "false");
  EXPECT_FALSE(r.at("contraction_ratios").empty());
}

TEST_F(CliTest, SimulateHeatDecay) {
  RunConfig c = small("heat_decay");
  c.history = HistorySource::Unit;
  c.horizon = 1.0;
  c.dt = 1e-3;
  c.output_every = 100;
  ASSERT_EQ(run("simulate", c, "heat"), kExitOk);
  const auto r = report(out("heat") / "report.txt");
  EXPECT_LE(std::stod(r.at("final_l2_norm")),
            std::exp(-kPi * kPi) * std::stod(r.at("initial_l2_norm")) + 1e-8);
  EXPECT_EQ(read_csv(out("heat") / "trajectory.csv").size(), 11u * 32u);
}

TEST_F(CliTest, CompareFromPeriodicAndZeroHistories) {
  RunConfig c = example(0.01, 0.01, 0.01);
  c.dt = 1.0 / 320.0;  // delays 0.3 and 0.2 are whole steps
  c.horizon = 3.0;
  c.output_every = 64;
  ASSERT_EQ(run("solve", c, "sol"), kExitOk);

  RunConfig periodic = c;
  periodic.history = HistorySource::Periodic;
  periodic.periodic_solution = (out("sol") / "solution.csv").string();
  periodic.threshold = 1e-5;
  ASSERT_EQ(run("compare", periodic, "per"), kExitOk) << last_error_;
  for (const auto& row : read_csv(out("per") / "distance.csv")) EXPECT_LE(row[1], 1e-5);

  RunConfig zero = c;
  zero.horizon = 4.0;
  ASSERT_EQ(run("compare", zero, "zero"), kExitOk) << last_error_;
  const auto d = read_csv(out("zero") / "distance.csv");
  ASSERT_EQ(d.size(), 4u);
  for (std::size_t p = 1; p < d.size(); ++p) EXPECT_LE(d[p][1], d[p - 1][1] + 1e-12);
  EXPECT_EQ(report(out("zero") / "report.txt").at("non_increasing"), "true");

  RunConfig missing = periodic;
  missing.periodic_solution = (out("nothing") / "solution.csv").string();
  EXPECT_EQ(run("compare", missing, "missing"), kExitRuntime);

  RunConfig tight = zero;
  tight.horizon = 1.0;
  tight.threshold = 1e-12;
  EXPECT_EQ(run("compare", tight, "tight"), kExitFail);
}

TEST_F(CliTest, ManufactureBundle) {
  RunConfig c = small("manufactured_linear");
  c.problem.tau = 0.3;
  c.problem.xi = 0.2;
  c.problem.g_profile = GProfile::Parabola;
  c.problem.g_scale = 0.01;
  ASSERT_EQ(run("manufacture", c, "bundle"), kExitOk);
  for (const char* f : {"problem.cfg", "exact.csv", "forcing.csv", "report.txt"}) {
    EXPECT_TRUE(fs::exists(out("bundle") / f)) << f;
  }
  EXPECT_LE(std::stod(report(out("bundle") / "report.txt").at("fixed_point_residual")), 1e-8);

  const RunConfig again = load_config((out("bundle") / "problem.cfg").string());
  ASSERT_EQ(run("solve", again, "resolve"), kExitOk);

  RunConfig zero = c;
  zero.problem.recipe.clear();
  ASSERT_EQ(run("manufacture", zero, "zero"), kExitOk);
  for (const auto& row : read_csv(out("zero") / "forcing.csv")) EXPECT_EQ(row[2], 0.0);

  RunConfig high = c;
  high.problem.recipe = {{17, 1.0, 1, 0.0, 0.0}};
  EXPECT_EQ(run("manufacture", high, "high"), kExitConfig);
}

TEST_F(CliTest, AtomicWriteLeavesNoTemporaries) {
  write_atomic(out("w") / "file.txt", "abc");
  write_atomic(out("w") / "file.txt", "def");
  EXPECT_EQ(slurp(out("w") / "file.txt"), "def");
  std::size_t count = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(out("w"))) ++count;
  EXPECT_EQ(count, 1u);
}

TEST_F(CliTest, BinaryExitCodes) {
  auto shell = [](const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const std::string tool = NPERIOD_TOOL;
  const fs::path cfg = out("e51.cfg");
  {
    std::ofstream f(cfg);
    f << "[problem]\nname = example51\nconvention = literal\n[constants]\na0 = 0.01\na1 = 0.01\n"
         "L = 0.01\n[grid]\nmodes = 8\ntime_points = 16\nspace_intervals = 17\n";
  }
  EXPECT_EQ(shell(tool + " --help"), 0);
  EXPECT_EQ(shell(tool + " check --config " + cfg.string() + " --out " + out("c").string()), 0);
  EXPECT_EQ(shell(tool + " check --config " + cfg.string() + " --set constants.L=0.8 --out " +
                  out("c2").string()),
            1);
  EXPECT_EQ(shell(tool + " solve --config " + cfg.string() + " --convention eigen --tol 1e-9 --out " +
                  out("s").string()),
            0);
  EXPECT_EQ(report(out("s") / "report.txt").at("config.problem.convention"), "eigen");
  EXPECT_EQ(shell(tool + " check --config " + (dir_ / "missing.cfg").string()), 3);
  EXPECT_EQ(shell(tool + " check --bogus-flag"), 3);
  EXPECT_EQ(shell(tool + " solve --config " + cfg.string() + " --space-grid 10"), 3);
  EXPECT_EQ(shell(tool), 3);
}
