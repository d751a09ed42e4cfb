#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waxman/potentials.hpp"

// Reference eigenvalues that share no machinery with the Green's-function
// and Lanczos solvers: an outward-shooting ODE integrator and closed forms.

namespace waxman {

enum class Parity { even, odd };

std::string to_string(Parity parity);
Parity parse_parity(const std::string& text);

/// Pointwise potential for the ODE integrator. Breakpoints (x > 0) are
/// jump locations; integration segments end exactly on them.
struct PotentialEvaluator {
  std::function<double(double)> value;
  std::vector<double> breakpoints;
  double max_value = 1.0;
};

PotentialEvaluator evaluator_for(const PotentialSpec& spec);

struct ShootingConfig {
  double lambda = 1.0;
  Parity parity = Parity::even;
  double half_width = 12.0;
  double step = 1e-3;
  /// Defaults to (1e-4, lambda * max V).
  std::optional<std::pair<double, double>> bracket;
  double tol = 1e-12;
  std::size_t scan_points = 50;
  /// u(0) for even parity, u'(0) for odd parity.
  double initial_amplitude = 1.0;

  void validate() const;
};

/// Integrates u'' = (eps - lambda V) u from 0 to L by fixed-step RK4 and
/// returns (u'(L) + sqrt(eps) u(L)) / max|u|. The numerator is proportional
/// to the amplitude of the growing exponential, so it vanishes exactly at a
/// bound state; the normalization by the running maximum makes it scale
/// invariant without the poles of u'(L)/u(L).
double shoot_mismatch(const ShootingConfig& cfg, const PotentialEvaluator& potential, double epsilon);

/// Binding energy of the lowest level of the given parity inside the
/// bracket: a pre-scan locates sign changes of the mismatch, the one at the
/// largest epsilon is bisected to cfg.tol. Throws NoSolutionError when the
/// mismatch does not change sign.
double shooting_eigenvalue(const ShootingConfig& cfg, const PotentialEvaluator& potential);

/// Closed-form binding energy of level `index` (0 = ground, 1 = first odd, ...)
///   Poschl-Teller lambda sech^2: s(s+1) = lambda, eps_n = (s - n)^2;
///   square well of half-width a: roots of k tan(ka) = sqrt(eps) (even) or
///   -k cot(ka) = sqrt(eps) (odd) with k^2 + eps = lambda.
/// Throws NoSolutionError when the level does not exist, std::invalid_argument
/// for other shapes.
double analytic_level(const PotentialSpec& spec, double lambda, std::size_t index);

} // namespace waxman
