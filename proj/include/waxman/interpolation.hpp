#pragma once

#include <span>
#include <vector>

namespace waxman {

/// Shape-preserving piecewise cubic Hermite interpolant (Fritsch-Butland
/// slopes). On every interval the interpolant stays between the two knot
/// values, so monotone data gives a monotone curve and no spurious roots.
class MonotoneCubic {
public:
  /// xs strictly increasing, at least two knots.
  MonotoneCubic(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;

  std::span<const double> knots() const { return xs_; }
  std::span<const double> values() const { return ys_; }
  std::span<const double> slopes() const { return slopes_; }

private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> slopes_;
};

} // namespace waxman
