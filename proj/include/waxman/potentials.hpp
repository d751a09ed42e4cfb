#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "waxman/grid.hpp"

namespace waxman {

// Shapes are nonnegative; the attraction comes from the -lambda V(x) term.

/// V(x) = exp(-x^2 / 2)
struct GaussianWell {};

/// V(x) = sech^2(x)
struct PoschlTellerWell {};

/// V(x) = 1 for |x| < a, 0 for |x| > a.
struct SquareWell {
  double a = 1.0;
};

/// Arbitrary values, one per grid node.
struct TabulatedPotential {
  std::vector<double> values;
};

using PotentialSpec = std::variant<GaussianWell, PoschlTellerWell, SquareWell, TabulatedPotential>;

std::string potential_name(const PotentialSpec& spec);

/// Pointwise value of a built-in shape. At a square-well edge the midpoint
/// of the jump (1/2) is returned. Tabulated potentials have no pointwise
/// form and throw std::invalid_argument.
template <class Real>
Real potential_value(const PotentialSpec& spec, const Real& x) {
  using std::abs;
  using std::cosh;
  using std::exp;
  return std::visit(
      [&](const auto& shape) -> Real {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, GaussianWell>) {
          return exp(-x * x / 2);
        } else if constexpr (std::is_same_v<T, PoschlTellerWell>) {
          Real c = cosh(x);
          return 1 / (c * c);
        } else if constexpr (std::is_same_v<T, SquareWell>) {
          Real ax = abs(x);
          if (ax < shape.a) return Real(1);
          if (ax > shape.a) return Real(0);
          return Real(0.5);
        } else {
          throw std::invalid_argument("tabulated potential has no pointwise evaluator");
        }
      },
      spec);
}

/// Samples V on the grid. A square-well node within 1e-9 h of |x| = a
/// receives the jump midpoint 1/2, which keeps the trapezoid rule second
/// order across the discontinuity.
SampledFunction sample_potential(const PotentialSpec& spec, const Grid& grid);

/// Coordinates >= 0 where the shape is discontinuous (square-well edge).
std::vector<double> potential_breakpoints(const PotentialSpec& spec);

/// Supremum of V over the real line (tabulated: max of the table).
double potential_max(const PotentialSpec& spec);

} // namespace waxman
