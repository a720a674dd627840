#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
  using namespace nperiod::cli;

  CLI::App app{"Periodic solutions of neutral parabolic equations with delays"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::size_t> modes;
  std::optional<std::size_t> time_grid;
  std::optional<std::size_t> space_grid;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::optional<std::string> convention;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> overrides;
  bool list_keys = false;

  app.add_option("--config", config_path, "configuration file");
  app.add_option("--out", out_dir, "output directory (created if missing)");
  app.add_option("--modes", modes, "number of sine modes N");
  app.add_option("--time-grid", time_grid, "time samples per period M_t");
  app.add_option("--space-grid", space_grid, "space intervals M_x");
  app.add_option("--tol", tol, "Picard tolerance");
  app.add_option("--max-iter", max_iter, "Picard iteration cap");
  app.add_option("--convention", convention, "eigen|literal")
      ->check(CLI::IsMember({"eigen", "literal"}));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--set", overrides, "override a config key: section.key=value");
  app.add_flag("--list-keys", list_keys, "print every config key and exit");

  app.add_subcommand("check", "evaluate the hypothesis inequalities");
  app.add_subcommand("solve", "compute the periodic solution by Picard iteration");
  app.add_subcommand("simulate", "integrate the initial value problem");
  app.add_subcommand("compare", "integrate and measure the distance to the periodic solution");
  app.add_subcommand("manufacture", "build a problem with a prescribed exact solution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (list_keys) {
    std::cout << describe_keys();
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << "a subcommand is required (check|solve|simulate|compare|manufacture)\n";
    return kExitConfig;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    if (modes) config.problem.grid.modes = *modes;
    if (time_grid) config.problem.grid.time_points = *time_grid;
    if (space_grid) config.problem.grid.space_intervals = *space_grid;
    if (tol) config.tol = *tol;
    if (max_iter) config.max_iter = *max_iter;
    if (convention) set_value(config, "problem.convention", *convention);
    if (seed) config.seed = *seed;
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects section.key=value, got '" + o + "'");
      set_value(config, o.substr(0, eq), o.substr(eq + 1));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  return run_command(app.get_subcommands().front()->get_name(), config, out_dir, std::cerr);
}
