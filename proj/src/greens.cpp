#include "waxman/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace waxman {

std::string to_string(Sector sector) { return sector == Sector::full ? "full" : "odd"; }

Sector parse_sector(const std::string& text) {
  if (text == "full" || text == "even") return Sector::full;
  if (text == "odd") return Sector::odd;
  throw std::invalid_argument("unknown sector '" + text + "' (expected full or odd)");
}

GreensKernel::GreensKernel(double epsilon, Sector sector)
    : epsilon_(epsilon), decay_(std::sqrt(epsilon)), sector_(sector) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("kernel epsilon must be positive, got " + std::to_string(epsilon));
}

namespace {

// exp(-k t) sinh(k t) for t >= 0, accurate as k t -> 0.
double damped_sinh(double k, double t) { return -0.5 * std::expm1(-2.0 * k * t); }

} // namespace

double GreensKernel::operator()(double x, double x_prime) const {
  const double k = decay_;
  if (sector_ == Sector::full) return std::exp(-k * std::abs(x - x_prime)) / (2.0 * k);

  // exp(-k|x-x'|) - exp(-k|x+x'|) = +-2 exp(-k max) sinh(k min) with a = |x|, b = |x'|.
  double a = std::abs(x);
  double b = std::abs(x_prime);
  if (a == 0.0 || b == 0.0) return 0.0;
  double lo = std::min(a, b);
  double hi = std::max(a, b);
  double value = std::exp(-k * (hi - lo)) * damped_sinh(k, lo) / k;
  return (x > 0.0) == (x_prime > 0.0) ? value : -value;
}

double kernel_value(const GreensKernel& kernel, double x, double x_prime) { return kernel(x, x_prime); }

SampledFunction apply_kernel(const GreensKernel& kernel, const SampledFunction& potential,
                             const SampledFunction& u) {
  require_same_grid(potential, u);
  const Grid& grid = u.grid();
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double k = kernel.decay();
  const double ratio = std::exp(-k * h);
  SampledFunction out(grid);

  if (kernel.sector() == Sector::full) {
    std::vector<double> source(n);
    for (std::size_t j = 0; j < n; ++j) source[j] = trapezoid_weight(grid, j) * potential[j] * u[j];

    std::vector<double> left(n);
    double running = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      running = ratio * running + source[i];
      left[i] = running;
    }
    running = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      out[i] = (left[i] + running) / (2.0 * k);
      running = ratio * (running + source[i]);
    }
    return out;
  }

  // Odd sector on the half line [0, L]; node c is the origin. Only the odd
  // part of u enters.
  const std::size_t c = grid.center();
  const std::size_t m = n - c;
  std::vector<double> source(m);
  std::vector<double> damped(m);
  for (std::size_t j = 0; j < m; ++j) {
    double weight = (j == 0 || j + 1 == m) ? 0.5 * h : h;
    source[j] = weight * potential[c + j] * 0.5 * (u[c + j] - u[c - j]);
    damped[j] = damped_sinh(k, grid.point(c + j));
  }
  // x' <= x contributes exp(-k x) sinh(k x') / k,
  // x' >  x contributes sinh(k x) exp(-k x') / k.
  std::vector<double> below(m);
  double running = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    running = ratio * running + damped[i] * source[i];
    below[i] = running;
  }
  running = 0.0;
  for (std::size_t i = m; i-- > 0;) {
    double value = (below[i] + damped[i] * running) / k;
    out[c + i] = value;
    out[c - i] = -value;
    running = ratio * (running + source[i]);
  }
  out[c] = 0.0;
  return out;
}

double apply_kernel_at(const GreensKernel& kernel, const SampledFunction& potential,
                       const SampledFunction& u, double x) {
  require_same_grid(potential, u);
  const Grid& grid = u.grid();
  const std::size_t n = grid.size();
  const std::size_t first = kernel.sector() == Sector::full ? 0 : grid.center();
  const double h = grid.spacing();
  double sum = 0.0;
  for (std::size_t j = first; j < n; ++j) {
    double weight = (j == first || j + 1 == n) ? 0.5 * h : h;
    double uj = kernel.sector() == Sector::full ? u[j] : 0.5 * (u[j] - u[grid.mirror(j)]);
    sum += weight * kernel(x, grid.point(j)) * potential[j] * uj;
  }
  return sum;
}

} // namespace waxman
