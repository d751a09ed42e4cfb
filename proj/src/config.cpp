#include "waxman/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "waxman/curve.hpp"

namespace waxman {

std::string to_string(SolverKind solver) {
  switch (solver) {
  case SolverKind::waxman:
    return "waxman";
  case SolverKind::lanczos:
    return "lanczos";
  case SolverKind::oracle:
    break;
  }
  return "oracle";
}

ConfigError::ConfigError(const std::string& message, std::size_t line)
    : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

const std::vector<std::string> kKnownKeys = {
    "potential", "square_well_a", "half_width", "n_points", "solver",     "epsilon",  "sector",   "x_ref",
    "tol",       "max_iter",      "lambda",     "m",        "parity",     "shoot_step", "tau_zero", "tau_spur",
    "output",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text, std::size_t line) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value))
    throw ConfigError("key '" + std::string(key) + "': malformed number '" + std::string(text) + "'", line);
  return value;
}

std::size_t parse_count(std::string_view key, std::string_view text, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ConfigError("key '" + std::string(key) + "': malformed integer '" + std::string(text) + "'", line);
  return value;
}

std::vector<double> parse_epsilons(std::string_view text, std::size_t line) {
  if (std::count(text.begin(), text.end(), ':') == 2) {
    auto c1 = text.find(':');
    auto c2 = text.find(':', c1 + 1);
    double lo = parse_real("epsilon", trim(text.substr(0, c1)), line);
    double hi = parse_real("epsilon", trim(text.substr(c1 + 1, c2 - c1 - 1)), line);
    std::size_t count = parse_count("epsilon", trim(text.substr(c2 + 1)), line);
    if (count == 0 || (count > 1 && !(lo < hi)))
      throw ConfigError("key 'epsilon': range must be lo:hi:count with lo < hi, count >= 1", line);
    return linear_epsilons(lo, hi, count);
  }
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    out.push_back(parse_real("epsilon", token, line));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Shortest text that reads back to the same double.
std::string format_real(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

} // namespace

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value, std::size_t line) {
  const std::string k(key);
  const std::string v(value);
  try {
    if (k == "potential") {
      if (v == "gaussian") {
        c.potential = GaussianWell{};
      } else if (v == "poschl_teller") {
        c.potential = PoschlTellerWell{};
      } else if (v == "square_well") {
        double a = std::holds_alternative<SquareWell>(c.potential) ? std::get<SquareWell>(c.potential).a : 1.0;
        c.potential = SquareWell{a};
      } else {
        throw ConfigError("key 'potential': unknown shape '" + v + "'", line);
      }
    } else if (k == "square_well_a") {
      double a = parse_real(key, value, line);
      if (!(a > 0.0)) throw ConfigError("key 'square_well_a' must be positive", line);
      if (!std::holds_alternative<SquareWell>(c.potential))
        throw ConfigError("key 'square_well_a' requires potential=square_well", line);
      std::get<SquareWell>(c.potential).a = a;
    } else if (k == "half_width") {
      c.half_width = parse_real(key, value, line);
    } else if (k == "n_points") {
      c.n_points = parse_count(key, value, line);
    } else if (k == "solver") {
      if (v == "waxman") {
        c.solver = SolverKind::waxman;
      } else if (v == "lanczos") {
        c.solver = SolverKind::lanczos;
      } else if (v == "oracle") {
        c.solver = SolverKind::oracle;
      } else {
        throw ConfigError("key 'solver': unknown solver '" + v + "'", line);
      }
    } else if (k == "epsilon") {
      c.epsilons = parse_epsilons(value, line);
    } else if (k == "sector") {
      c.sector = parse_sector(v);
    } else if (k == "x_ref") {
      c.x_ref = parse_real(key, value, line);
    } else if (k == "tol") {
      c.tol = parse_real(key, value, line);
    } else if (k == "max_iter") {
      c.max_iter = parse_count(key, value, line);
    } else if (k == "lambda") {
      c.lambda = parse_real(key, value, line);
    } else if (k == "m") {
      c.m = parse_count(key, value, line);
    } else if (k == "parity") {
      c.parity = parse_parity(v);
    } else if (k == "shoot_step") {
      c.shoot_step = parse_real(key, value, line);
    } else if (k == "tau_zero") {
      c.tau_zero = parse_real(key, value, line);
    } else if (k == "tau_spur") {
      c.tau_spur = parse_real(key, value, line);
    } else if (k == "output") {
      c.output = v;
    } else {
      throw ConfigError("unknown key '" + k + "'", line);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError("key '" + k + "': " + e.what(), line);
  }
}

void validate_config(const ExperimentConfig& c) {
  try {
    Grid grid = c.grid();
    if (!(c.tol > 0.0)) throw ConfigError("tol must be positive", 0);
    if (c.max_iter == 0) throw ConfigError("max_iter must be at least 1", 0);
    if (!(c.lambda > 0.0)) throw ConfigError("lambda must be positive", 0);
    if (c.m == 0) throw ConfigError("m must be at least 1", 0);
    if (!(c.shoot_step > 0.0)) throw ConfigError("shoot_step must be positive", 0);
    if (!(c.tau_zero > 0.0) || !(c.tau_spur > c.tau_zero))
      throw ConfigError("need 0 < tau_zero < tau_spur", 0);
    for (std::size_t i = 0; i < c.epsilons.size(); ++i) {
      if (!(c.epsilons[i] > 0.0)) throw ConfigError("epsilon values must be positive", 0);
      if (i > 0 && !(c.epsilons[i - 1] < c.epsilons[i]))
        throw ConfigError("epsilon values must be strictly increasing", 0);
    }
    double ref = c.x_ref.value_or(default_x_ref(c.sector));
    grid.node_index(ref);
    if (c.sector == Sector::odd && ref == 0.0) throw ConfigError("x_ref must be nonzero in the odd sector", 0);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what(), 0);
  }
}

ExperimentConfig parse_config(std::string_view text) {
  struct Entry {
    std::string key, value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::map<std::string, std::size_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    auto hash = raw.find('#');
    auto line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected key=value, got '" + std::string(line) + "'", line_no);
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("empty key", line_no);
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw ConfigError("unknown key '" + key + "'", line_no);
    if (value.empty()) throw ConfigError("key '" + key + "' has an empty value", line_no);
    if (auto it = seen.find(key); it != seen.end())
      throw ConfigError("duplicate key '" + key + "' (first set on line " + std::to_string(it->second) + ")", line_no);
    seen[key] = line_no;
    entries.push_back({key, value, line_no});
  }

  std::vector<std::string> missing;
  for (const char* required : {"potential", "solver"})
    if (!seen.count(required)) missing.emplace_back(required);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw ConfigError("missing required keys: " + list, 0);
  }

  ExperimentConfig config;
  // `potential` first so shape parameters can attach to it.
  std::stable_partition(entries.begin(), entries.end(), [](const Entry& e) { return e.key == "potential"; });
  for (const auto& e : entries) apply_setting(config, e.key, e.value, e.line);

  if (config.solver == SolverKind::waxman && !seen.count("epsilon"))
    throw ConfigError("missing required key: epsilon (needed by solver=waxman)", 0);
  validate_config(config);
  return config;
}

WaxmanConfig ExperimentConfig::waxman_config() const {
  WaxmanConfig cfg;
  cfg.epsilon = epsilons.empty() ? 0.0 : epsilons.front();
  cfg.x_ref = x_ref;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.sector = sector;
  return cfg;
}

ClassifyOptions ExperimentConfig::classify_options() const {
  ClassifyOptions options;
  options.tau_zero = tau_zero;
  options.tau_spur = tau_spur;
  return options;
}

std::vector<std::string> ExperimentConfig::echo() const {
  std::vector<std::string> lines;
  lines.push_back("potential=" + potential_name(potential));
  if (const auto* well = std::get_if<SquareWell>(&potential)) lines.push_back("square_well_a=" + format_real(well->a));
  lines.push_back("half_width=" + format_real(half_width));
  lines.push_back("n_points=" + std::to_string(n_points));
  lines.push_back("solver=" + to_string(solver));
  std::string eps;
  for (double e : epsilons) eps += (eps.empty() ? "" : ",") + format_real(e);
  lines.push_back("epsilon=" + eps);
  lines.push_back("sector=" + to_string(sector));
  lines.push_back("x_ref=" + format_real(x_ref.value_or(default_x_ref(sector))));
  lines.push_back("tol=" + format_real(tol));
  lines.push_back("max_iter=" + std::to_string(max_iter));
  lines.push_back("lambda=" + format_real(lambda));
  lines.push_back("m=" + std::to_string(m));
  lines.push_back("parity=" + to_string(parity));
  lines.push_back("shoot_step=" + format_real(shoot_step));
  lines.push_back("tau_zero=" + format_real(tau_zero));
  lines.push_back("tau_spur=" + format_real(tau_spur));
  lines.push_back("output=" + output);
  return lines;
}

} // namespace waxman
