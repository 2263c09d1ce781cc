#include "frictionless/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "frictionless/errors.hpp"

namespace frictionless {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const auto item = trim(value.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError("key '" + std::string(key) + "': not a number: '" + std::string(v) + "'");
  return out;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError("key '" + std::string(key) + "': not a non-negative integer: '" + std::string(v) + "'");
  return out;
}

double positive(std::string_view key, double v) {
  if (!(v > 0.0)) throw ConfigError("key '" + std::string(key) + "' must be positive");
  return v;
}

template <typename T>
void dedupe(std::vector<T>& v) {
  std::vector<T> out;
  for (const auto& x : v)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  v = std::move(out);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

DesignSpec RunConfig::design_spec(Regime regime, Ansatz ansatz) const {
  DesignSpec s;
  s.omega0 = 2.0 * std::numbers::pi * omega0Hz;
  s.omegaF = 2.0 * std::numbers::pi * omegaFHz;
  s.tF = tFSeconds;
  s.regime = regime;
  s.ansatz = ansatz;
  s.samples = samples;
  s.validate();
  return s;
}

Grid RunConfig::grid(int dimension) const {
  Grid g = dimension == 1 ? Grid{1, points1d, extent1d} : Grid{2, points2d, extent2d};
  g.validate();
  return g;
}

SimulationSettings RunConfig::settings(int dimension) const {
  SimulationSettings s;
  s.grid = grid(dimension);
  s.steps = steps;
  s.records = records;
  s.holdPeriods = holdPeriods;
  s.holdRecords = holdRecords;
  s.groundState.dt = imagDt;
  s.groundState.tolerance = imagTolerance;
  s.groundState.maxSteps = imagMaxSteps;
  s.backend = backend;
  return s;
}

std::string RunConfig::to_text() const {
  std::ostringstream os;
  auto join = [](const auto& items, auto conv) {
    std::string out;
    for (const auto& x : items) {
      if (!out.empty()) out += ", ";
      out += conv(x);
    }
    return out;
  };
  os << "omega0_hz = " << fmt(omega0Hz) << '\n'
     << "omegaf_hz = " << fmt(omegaFHz) << '\n'
     << "tf_s = " << fmt(tFSeconds) << '\n'
     << "regimes = " << join(regimes, [](Regime r) { return std::string(to_string(r)); }) << '\n'
     << "ansaetze = " << join(ansaetze, [](Ansatz a) { return std::string(to_string(a)); }) << '\n'
     << "samples = " << samples << '\n'
     << "g_tilde = " << join(gTilde, [](double g) { return fmt(g); }) << '\n'
     << "grid_points_1d = " << points1d << '\n'
     << "grid_extent_1d = " << fmt(extent1d) << '\n'
     << "grid_points_2d = " << points2d << '\n'
     << "grid_extent_2d = " << fmt(extent2d) << '\n'
     << "steps = " << steps << '\n'
     << "records = " << records << '\n'
     << "hold_periods = " << fmt(holdPeriods) << '\n'
     << "hold_records = " << holdRecords << '\n';
  if (imagDt) os << "imag_dt = " << fmt(*imagDt) << '\n';
  os << "imag_tolerance = " << fmt(imagTolerance) << '\n'
     << "imag_max_steps = " << imagMaxSteps << '\n';
  if (!omegaTable.empty()) os << "omega_table = " << omegaTable << '\n';
  if (!outDir.empty()) os << "out_dir = " << outDir << '\n';
  os << "seed = " << seed << '\n'
     << "backend = " << (backend == kernels::Backend::Serial ? "serial" : "parallel") << '\n';
  return os.str();
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  bool tf_set = false;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'");
    if (value.empty() && key != "g_tilde") throw ConfigError("key '" + key + "' has an empty value");

    if (key == "omega0_hz") {
      cfg.omega0Hz = positive(key, to_double(key, value));
    } else if (key == "omegaf_hz") {
      cfg.omegaFHz = positive(key, to_double(key, value));
    } else if (key == "tf_s" || key == "tf_ms") {
      if (tf_set) throw ConfigError("give only one of tf_s and tf_ms");
      tf_set = true;
      cfg.tFSeconds = positive(key, to_double(key, value)) * (key == "tf_ms" ? 1e-3 : 1.0);
    } else if (key == "regimes" || key == "regime") {
      cfg.regimes.clear();
      for (auto item : split_list(value)) cfg.regimes.push_back(parse_regime(item));
      dedupe(cfg.regimes);
    } else if (key == "ansaetze" || key == "ansatz") {
      cfg.ansaetze.clear();
      for (auto item : split_list(value)) cfg.ansaetze.push_back(parse_ansatz(item));
      dedupe(cfg.ansaetze);
    } else if (key == "samples") {
      cfg.samples = to_unsigned(key, value);
      if (cfg.samples < 2) throw ConfigError("samples must be at least 2");
    } else if (key == "g_tilde") {
      cfg.gTilde.clear();
      if (value != "none" && !value.empty())
        for (auto item : split_list(value)) {
          const double g = to_double(key, item);
          if (g < 0.0) throw ConfigError("g_tilde values must be non-negative");
          cfg.gTilde.push_back(g);
        }
      dedupe(cfg.gTilde);
    } else if (key == "grid_points_1d") {
      cfg.points1d = to_unsigned(key, value);
    } else if (key == "grid_extent_1d") {
      cfg.extent1d = positive(key, to_double(key, value));
    } else if (key == "grid_points_2d") {
      cfg.points2d = to_unsigned(key, value);
    } else if (key == "grid_extent_2d") {
      cfg.extent2d = positive(key, to_double(key, value));
    } else if (key == "steps") {
      cfg.steps = to_unsigned(key, value);
      if (cfg.steps == 0) throw ConfigError("steps must be positive");
    } else if (key == "records") {
      cfg.records = to_unsigned(key, value);
    } else if (key == "hold_periods") {
      cfg.holdPeriods = to_double(key, value);
      if (cfg.holdPeriods < 0.0) throw ConfigError("hold_periods must be non-negative");
    } else if (key == "hold_records") {
      cfg.holdRecords = to_unsigned(key, value);
    } else if (key == "imag_dt") {
      cfg.imagDt = positive(key, to_double(key, value));
    } else if (key == "imag_tolerance") {
      cfg.imagTolerance = positive(key, to_double(key, value));
    } else if (key == "imag_max_steps") {
      cfg.imagMaxSteps = to_unsigned(key, value);
    } else if (key == "omega_table") {
      cfg.omegaTable = std::string(value);
    } else if (key == "out_dir") {
      cfg.outDir = std::string(value);
    } else if (key == "seed") {
      cfg.seed = to_unsigned(key, value);
    } else if (key == "backend") {
      if (value == "serial") cfg.backend = kernels::Backend::Serial;
      else if (value == "parallel") cfg.backend = kernels::Backend::Parallel;
      else throw ConfigError("backend must be serial or parallel");
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }

  // Validate everything up front.
  for (auto r : cfg.regimes)
    for (auto a : cfg.ansaetze) (void)cfg.design_spec(r, a);
  (void)cfg.grid(1);
  (void)cfg.grid(2);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace frictionless
