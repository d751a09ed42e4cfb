#pragma once

#include <cstddef>
#include <optional>

#include "waxman/greens.hpp"
#include "waxman/grid.hpp"

namespace waxman {

/// Coupling strength supporting binding energy epsilon for the eigenfunction
/// candidate u, normalized so that u(x_ref) = 1:
///   lambda = 1 / integral of G(x_ref - x') V(x') u(x') dx'.
/// Throws NumericalError when the denominator is below 1e-14 in magnitude.
double lambda_from(const GreensKernel& kernel, const SampledFunction& potential, const SampledFunction& u,
                   double x_ref);

/// One normalized iteration: apply the kernel and divide by the value at
/// x_ref, so the result is exactly 1 there. Throws NumericalError if the
/// kernel output vanishes at x_ref.
SampledFunction waxman_step(const GreensKernel& kernel, const SampledFunction& potential,
                            const SampledFunction& u, double x_ref);

struct WaxmanConfig {
  double epsilon = 0.0;
  /// Normalization node. Defaults to 0 in the full sector and 1 in the odd
  /// sector, where u(0) = 0.
  std::optional<double> x_ref;
  double tol = 1e-10;
  std::size_t max_iter = 500;
  Sector sector = Sector::full;
  /// Defaults to u = 1 (full) or u = x (odd).
  std::optional<SampledFunction> start;

  double resolved_x_ref() const;
  /// Throws std::invalid_argument on a violated precondition.
  void validate(const Grid& grid) const;
};

double default_x_ref(Sector sector);
SampledFunction default_start(const Grid& grid, Sector sector);

struct WaxmanResult {
  SampledFunction u;
  double lambda = 0.0;
  double epsilon = 0.0;
  std::size_t iterations = 0;
  /// Sup-norm of the last update.
  double residual = 0.0;
  bool converged = false;
};

/// Iterates waxman_step from cfg.start until successive iterates agree to
/// cfg.tol in the sup norm, then extracts lambda. Running out of iterations
/// is not an error; the result carries converged = false.
WaxmanResult waxman_fixed_point(const WaxmanConfig& cfg, const SampledFunction& potential);

/// Residual of the grid Schroedinger equation -u'' - lambda V u + eps u with
/// the central second difference, sup-norm over interior nodes.
double schroedinger_residual(const SampledFunction& u, const SampledFunction& potential, double lambda,
                             double epsilon);

} // namespace waxman
