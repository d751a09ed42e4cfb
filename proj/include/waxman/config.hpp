#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "waxman/fixed_point.hpp"
#include "waxman/greens.hpp"
#include "waxman/grid.hpp"
#include "waxman/lanczos.hpp"
#include "waxman/oracles.hpp"
#include "waxman/potentials.hpp"

namespace waxman {

enum class SolverKind { waxman, lanczos, oracle };

std::string to_string(SolverKind solver);

/// Parse failure; line() is 0 when the problem is not tied to a line
/// (e.g. a missing key).
class ConfigError : public std::invalid_argument {
public:
  ConfigError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct ExperimentConfig {
  PotentialSpec potential = GaussianWell{};
  double half_width = 12.0;
  std::size_t n_points = 2401;
  SolverKind solver = SolverKind::waxman;

  // Waxman
  std::vector<double> epsilons;
  Sector sector = Sector::full;
  std::optional<double> x_ref;
  double tol = 1e-10;
  std::size_t max_iter = 500;

  // Lanczos / oracle
  double lambda = 1.0;
  std::size_t m = 18;
  Parity parity = Parity::even;
  double shoot_step = 1e-3;
  double tau_zero = 0.05;
  double tau_spur = 0.5;

  std::string output;

  Grid grid() const { return Grid(half_width, n_points); }
  WaxmanConfig waxman_config() const;
  ClassifyOptions classify_options() const;

  /// Fully resolved `key=value` lines, defaults included.
  std::vector<std::string> echo() const;
};

/// Flat `key=value` lines; `#` starts a comment. Unknown keys, malformed
/// values and duplicates are rejected with their line number. Required:
/// `potential`, `solver`, and `epsilon` for the waxman solver.
///
/// `epsilon` takes a comma-separated list or `lo:hi:count` (evenly spaced).
/// `potential` is gaussian | poschl_teller | square_well (with optional
/// `square_well_a`, default 1).
ExperimentConfig parse_config(std::string_view text);

/// Applies one `key=value` override on top of an existing config.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value, std::size_t line = 0);

/// Checks cross-key constraints (grid validity, solver requirements).
void validate_config(const ExperimentConfig& config);

} // namespace waxman
