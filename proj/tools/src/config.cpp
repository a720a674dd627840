#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace nperiod::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt_double(double v) { return fmt::format("{:.17g}", v); }

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("expected a finite number, got '" + s + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
  }
  return v;
}

template <typename E>
using Names = std::vector<std::pair<E, const char*>>;

template <typename E>
E parse_enum(const std::string& s, const Names<E>& names) {
  std::string options;
  for (const auto& [value, name] : names) {
    if (s == name) return value;
    options += options.empty() ? name : std::string("|") + name;
  }
  throw std::invalid_argument("expected one of " + options + ", got '" + s + "'");
}

template <typename E>
std::string enum_name(E v, const Names<E>& names) {
  for (const auto& [value, name] : names) {
    if (value == v) return name;
  }
  return "?";
}

const Names<Convention> kConventions{{Convention::EigenConsistent, "eigen"},
                                     {Convention::Literal, "literal"}};
const Names<Interpolation> kInterpolations{{Interpolation::Trigonometric, "trigonometric"},
                                           {Interpolation::Linear, "linear"},
                                           {Interpolation::Strict, "strict"}};
const Names<SourceModel> kSourceModels{{SourceModel::Trigonometric, "trigonometric"},
                                       {SourceModel::PiecewiseLinear, "piecewise_linear"}};
const Names<AgMode> kAgModes{{AgMode::Spectral, "spectral"}, {AgMode::Direct, "direct"}};
const Names<GrowthBound> kGrowth{{GrowthBound::Lipschitz, "lipschitz"},
                                 {GrowthBound::Affine, "affine"},
                                 {GrowthBound::General, "general"}};
const Names<GProfile> kProfiles{
    {GProfile::None, "none"}, {GProfile::Parabola, "parabola"}, {GProfile::Sine4, "sine4"}};
const Names<InitialGuess> kInitial{{InitialGuess::Zero, "zero"}, {InitialGuess::Random, "random"}};
const Names<HistorySource> kHistory{{HistorySource::Zero, "zero"},
                                    {HistorySource::Unit, "unit"},
                                    {HistorySource::Periodic, "periodic"},
                                    {HistorySource::Exact, "exact"}};

// Recipe terms "mode mean harmonic sin cos" separated by ';'.
std::vector<ManufacturedTerm> parse_recipe(const std::string& s) {
  std::vector<ManufacturedTerm> terms;
  std::stringstream all(s);
  std::string chunk;
  while (std::getline(all, chunk, ';')) {
    if (trim(chunk).empty()) continue;
    std::istringstream in(chunk);
    std::vector<std::string> parts;
    for (std::string w; in >> w;) parts.push_back(w);
    if (parts.size() != 5) {
      throw std::invalid_argument("recipe term needs 'mode mean harmonic sin cos', got '" +
                                  trim(chunk) + "'");
    }
    ManufacturedTerm t;
    t.mode = parse_int<std::size_t>(parts[0]);
    t.mean = parse_double(parts[1]);
    t.harmonic = parse_int<unsigned>(parts[2]);
    t.sin_amp = parse_double(parts[3]);
    t.cos_amp = parse_double(parts[4]);
    terms.push_back(t);
  }
  return terms;
}

std::string render_recipe(const std::vector<ManufacturedTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += "; ";
    out += fmt::format("{} {} {} {} {}", t.mode, fmt_double(t.mean), t.harmonic,
                       fmt_double(t.sin_amp), fmt_double(t.cos_amp));
  }
  return out;
}

struct Key {
  const char* section;
  const char* name;
  const char* help;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

#define NP_DOUBLE(sec, key, field, help)                                                   \
  Key {                                                                                    \
    sec, key, help, [](RunConfig& c, const std::string& v) { c.field = parse_double(v); }, \
        [](const RunConfig& c) { return fmt_double(c.field); }                             \
  }
#define NP_SIZE(sec, key, field, help)                                                         \
  Key {                                                                                        \
    sec, key, help,                                                                            \
        [](RunConfig& c, const std::string& v) { c.field = parse_int<std::size_t>(v); },      \
        [](const RunConfig& c) { return std::to_string(c.field); }                             \
  }
#define NP_ENUM(sec, key, field, table, help)                                                   \
  Key {                                                                                         \
    sec, key, help, [](RunConfig& c, const std::string& v) { c.field = parse_enum(v, table); }, \
        [](const RunConfig& c) { return enum_name(c.field, table); }                            \
  }

const std::vector<Key>& keys() {
  static const std::vector<Key> table{
      Key{"problem", "name", "registry problem: heat_decay|constant_forcing|manufactured_linear|example51",
          [](RunConfig& c, const std::string& v) { c.problem.name = v; },
          [](const RunConfig& c) { return c.problem.name; }},
      NP_DOUBLE("problem", "omega", problem.omega, "period omega > 0"),
      NP_DOUBLE("problem", "tau", problem.tau, "delay of the F argument (reduced mod omega)"),
      NP_DOUBLE("problem", "xi", problem.xi, "delay of the neutral term (reduced mod omega)"),
      NP_DOUBLE("problem", "alpha", problem.alpha, "fractional order of the state space, in [0,1)"),
      NP_ENUM("problem", "convention", problem.convention, kConventions,
              "eigen|literal: eigenvalues used for A^(1/2)"),
      NP_ENUM("problem", "interpolation", problem.interpolation, kInterpolations,
              "trigonometric|linear|strict evaluation of delayed states"),
      NP_ENUM("problem", "source_model", problem.source_model, kSourceModels,
              "trigonometric|piecewise_linear forcing interpolant of the periodic solver"),
      NP_ENUM("problem", "ag_mode", problem.ag_mode, kAgModes, "spectral|direct formation of AG"),
      NP_ENUM("problem", "g_profile", problem.g_profile, kProfiles,
              "none|parabola|sine4 spatial shape of g (manufactured_linear)"),
      NP_DOUBLE("problem", "g_scale", problem.g_scale, "amplitude of g (manufactured_linear)"),
      NP_DOUBLE("problem", "g_modulation", problem.g_modulation,
                "g is multiplied by 1 + g_modulation sin(2 pi t/omega)"),
      Key{"problem", "recipe", "u* terms 'mode mean harmonic sin cos' separated by ';'",
          [](RunConfig& c, const std::string& v) { c.problem.recipe = parse_recipe(v); },
          [](const RunConfig& c) { return render_recipe(c.problem.recipe); }},
      NP_DOUBLE("constants", "a0", problem.constants.a0, "growth constant a0"),
      NP_DOUBLE("constants", "a1", problem.constants.a1, "growth constant a1"),
      NP_DOUBLE("constants", "K", problem.constants.K, "growth constant K"),
      NP_DOUBLE("constants", "L", problem.constants.L, "Lipschitz constant of AG"),
      NP_DOUBLE("constants", "L1", problem.constants.L1, "Hoelder constant of F"),
      NP_DOUBLE("constants", "L2", problem.constants.L2, "Hoelder constant of AG"),
      NP_DOUBLE("constants", "mu1", problem.constants.mu1, "Hoelder exponent of F, in (0,1]"),
      NP_DOUBLE("constants", "mu2", problem.constants.mu2, "Hoelder exponent of AG, in (0,1]"),
      Key{"constants", "gamma", "growth integral gamma; empty means derive it from a0, a1",
          [](RunConfig& c, const std::string& v) {
            if (v.empty()) {
              c.problem.constants.gamma.reset();
            } else {
              c.problem.constants.gamma = parse_double(v);
            }
          },
          [](const RunConfig& c) {
            return c.problem.constants.gamma ? fmt_double(*c.problem.constants.gamma)
                                             : std::string();
          }},
      NP_ENUM("constants", "growth", problem.constants.growth, kGrowth,
              "lipschitz|affine|general: how the growth of F is declared"),
      NP_SIZE("grid", "modes", problem.grid.modes, "number of sine modes N"),
      NP_SIZE("grid", "time_points", problem.grid.time_points, "time samples per period M_t"),
      NP_SIZE("grid", "space_intervals", problem.grid.space_intervals,
              "space intervals M_x (at least 2N+1)"),
      NP_DOUBLE("solve", "tol", tol, "Picard tolerance in the C,alpha norm"),
      NP_SIZE("solve", "max_iter", max_iter, "Picard iteration cap"),
      NP_DOUBLE("solve", "damping", damping, "relaxation factor in (0,1]"),
      NP_ENUM("solve", "initial", initial, kInitial, "zero|random initial guess"),
      Key{"solve", "seed", "seed for random initial guesses",
          [](RunConfig& c, const std::string& v) { c.seed = parse_int<std::uint64_t>(v); },
          [](const RunConfig& c) { return std::to_string(c.seed); }},
      NP_DOUBLE("simulate", "horizon", horizon, "integration horizon"),
      NP_DOUBLE("simulate", "dt", dt, "time step"),
      NP_ENUM("simulate", "history", history, kHistory,
              "zero|unit|periodic|exact initial history (unit = e_1; exact needs manufactured_linear)"),
      NP_SIZE("simulate", "output_every", output_every, "write every k-th step to trajectory.csv"),
      NP_DOUBLE("compare", "threshold", threshold, "pass threshold for the last period distance"),
      Key{"compare", "periodic_solution", "solution.csv of an earlier solve; empty solves in-run",
          [](RunConfig& c, const std::string& v) { c.periodic_solution = v; },
          [](const RunConfig& c) { return c.periodic_solution; }},
  };
  return table;
}

#undef NP_DOUBLE
#undef NP_SIZE
#undef NP_ENUM

const Key* find_key(const std::string& section, const std::string& name) {
  for (const auto& k : keys()) {
    if (section == k.section && name == k.name) return &k;
  }
  return nullptr;
}

bool known_section(const std::string& section) {
  for (const auto& k : keys()) {
    if (section == k.section) return true;
  }
  return false;
}

}  // namespace

RunConfig parse_config(const std::string& text, RunConfig config) {
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("malformed section header '" + line + "'", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (!known_section(section)) throw ConfigError("unknown section [" + section + "]", line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line_no);
    const std::string name = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError("key '" + name + "' outside a section", line_no);
    const Key* key = find_key(section, name);
    if (!key) throw ConfigError("unknown key '" + name + "' in [" + section + "]", line_no);
    try {
      key->set(config, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(section + "." + name + ": " + e.what(), line_no);
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const RunConfig& config) {
  std::string out;
  std::string section;
  for (const auto& k : keys()) {
    if (section != k.section) {
      if (!section.empty()) out += '\n';
      section = k.section;
      out += fmt::format("[{}]\n", section);
    }
    out += fmt::format("{} = {}\n", k.name, k.get(config));
  }
  return out;
}

void set_value(RunConfig& config, const std::string& dotted_key, const std::string& value) {
  const auto dot = dotted_key.find('.');
  const Key* key = dot == std::string::npos
                       ? nullptr
                       : find_key(dotted_key.substr(0, dot), dotted_key.substr(dot + 1));
  if (!key) throw ConfigError("unknown key '" + dotted_key + "'");
  try {
    key->set(config, value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(dotted_key + ": " + e.what());
  }
}

std::string describe_keys() {
  std::string out;
  for (const auto& k : keys()) {
    out += fmt::format("{:<28}{}\n", std::string(k.section) + "." + k.name, k.help);
  }
  return out;
}

}  // namespace nperiod::cli
