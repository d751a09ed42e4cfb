#include "waxman/fixed_point.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "waxman/errors.hpp"

namespace waxman {

double lambda_from(const GreensKernel& kernel, const SampledFunction& potential, const SampledFunction& u,
                   double x_ref) {
  double denominator = apply_kernel_at(kernel, potential, u, x_ref);
  if (!(std::abs(denominator) >= 1e-14))
    throw NumericalError("kernel integral at x_ref = " + std::to_string(x_ref) +
                         " vanishes; no admissible coupling at epsilon = " + std::to_string(kernel.epsilon()));
  return 1.0 / denominator;
}

SampledFunction waxman_step(const GreensKernel& kernel, const SampledFunction& potential,
                            const SampledFunction& u, double x_ref) {
  if (!u.all_finite()) throw std::invalid_argument("waxman_step: iterate contains non-finite values");
  SampledFunction next = apply_kernel(kernel, potential, u);
  const std::size_t ref = u.grid().node_index(x_ref);
  const double pivot = next[ref];
  if (pivot == 0.0 || std::abs(pivot) <= 1e-14 * sup_norm(next))
    throw NumericalError("waxman_step: kernel output vanishes at x_ref = " + std::to_string(x_ref) +
                         " (epsilon = " + std::to_string(kernel.epsilon()) + ", sector " +
                         to_string(kernel.sector()) + ")");
  next *= 1.0 / pivot;
  next[ref] = 1.0;
  if (!next.all_finite()) throw NumericalError("waxman_step: iterate overflowed");
  return next;
}

double default_x_ref(Sector sector) { return sector == Sector::full ? 0.0 : 1.0; }

SampledFunction default_start(const Grid& grid, Sector sector) {
  if (sector == Sector::full) return SampledFunction::sample(grid, [](double) { return 1.0; });
  return SampledFunction::sample(grid, [](double x) { return x; });
}

double WaxmanConfig::resolved_x_ref() const { return x_ref.value_or(default_x_ref(sector)); }

void WaxmanConfig::validate(const Grid& grid) const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("epsilon must be positive, got " + std::to_string(epsilon));
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter == 0) throw std::invalid_argument("max_iter must be at least 1");
  const double ref = resolved_x_ref();
  grid.node_index(ref);
  if (sector == Sector::odd && ref == 0.0)
    throw std::invalid_argument("x_ref must be nonzero in the odd sector");
  if (start && !(start->grid() == grid)) throw std::invalid_argument("start vector lives on a different grid");
}

WaxmanResult waxman_fixed_point(const WaxmanConfig& cfg, const SampledFunction& potential) {
  const Grid& grid = potential.grid();
  cfg.validate(grid);
  const GreensKernel kernel(cfg.epsilon, cfg.sector);
  const double x_ref = cfg.resolved_x_ref();

  WaxmanResult result{cfg.start.value_or(default_start(grid, cfg.sector)), 0.0, cfg.epsilon, 0, 0.0, false};
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    SampledFunction next = waxman_step(kernel, potential, result.u, x_ref);
    result.residual = sup_distance(next, result.u);
    result.u = std::move(next);
    result.iterations = it;
    if (result.residual <= cfg.tol) {
      result.converged = true;
      break;
    }
  }
  result.lambda = lambda_from(kernel, potential, result.u, x_ref);
  return result;
}

double schroedinger_residual(const SampledFunction& u, const SampledFunction& potential, double lambda,
                             double epsilon) {
  require_same_grid(u, potential);
  const double h2 = u.grid().spacing() * u.grid().spacing();
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < u.size(); ++k) {
    double second = (u[k - 1] - 2.0 * u[k] + u[k + 1]) / h2;
    double r = -second - lambda * potential[k] * u[k] + epsilon * u[k];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

} // namespace waxman
