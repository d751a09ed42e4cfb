#pragma once

#include <string>

#include "waxman/grid.hpp"

namespace waxman {

/// Parity sector of the Green's kernel. `odd` uses the image kernel
/// G(x - x') - G(x + x'), which vanishes at the origin.
enum class Sector { full, odd };

std::string to_string(Sector sector);
Sector parse_sector(const std::string& text);

/// Decaying Green's function of (-d^2/dx^2 + epsilon) on the real line,
///   G(x) = exp(-sqrt(epsilon) |x|) / (2 sqrt(epsilon)),
/// optionally restricted to the odd sector.
class GreensKernel {
public:
  GreensKernel(double epsilon, Sector sector = Sector::full);

  double epsilon() const { return epsilon_; }
  double decay() const { return decay_; }
  Sector sector() const { return sector_; }

  double operator()(double x, double x_prime) const;

private:
  double epsilon_;
  double decay_;
  Sector sector_;
};

double kernel_value(const GreensKernel& kernel, double x, double x_prime);

/// w(x) = integral of G(x - x') V(x') u(x') dx' at every node, by the
/// trapezoid rule. The full sector integrates over [-L, L]. The odd sector
/// integrates the image kernel against the odd part of u over [0, L] and
/// extends w antisymmetrically, which equals the full-kernel result for the
/// odd part of u when V is even.
///
/// Runs in O(n): the exponential kernel factorizes, so the left and right
/// partial sums obey first-order recurrences.
SampledFunction apply_kernel(const GreensKernel& kernel, const SampledFunction& potential,
                             const SampledFunction& u);

/// Same quadrature as apply_kernel, evaluated at the single node x.
double apply_kernel_at(const GreensKernel& kernel, const SampledFunction& potential,
                       const SampledFunction& u, double x);

} // namespace waxman
