#include "waxman/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace waxman {

namespace {

bool same_sign(double a, double b) { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

// Non-centred three-point end slope, clipped to keep the end interval monotone.
double end_slope(double h0, double h1, double d0, double d1) {
  double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (!same_sign(s, d0)) return 0.0;
  if (!same_sign(d0, d1) && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
  return s;
}

} // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n < 2 || ys_.size() != n) throw std::invalid_argument("MonotoneCubic needs >= 2 knots with matching values");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(xs_[i] < xs_[i + 1])) throw std::invalid_argument("MonotoneCubic knots must be strictly increasing");

  std::vector<double> width(n - 1), secant(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    width[i] = xs_[i + 1] - xs_[i];
    secant[i] = (ys_[i + 1] - ys_[i]) / width[i];
  }

  slopes_.assign(n, 0.0);
  if (n == 2) {
    slopes_[0] = slopes_[1] = secant[0];
    return;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!same_sign(secant[i - 1], secant[i])) continue;
    // Weighted harmonic mean of the neighbouring secants.
    double w1 = 2.0 * width[i] + width[i - 1];
    double w2 = width[i] + 2.0 * width[i - 1];
    slopes_[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
  }
  slopes_[0] = end_slope(width[0], width[1], secant[0], secant[1]);
  slopes_[n - 1] = end_slope(width[n - 2], width[n - 3], secant[n - 2], secant[n - 3]);
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t n = xs_.size();
  std::size_t i;
  if (x <= xs_.front()) {
    i = 0;
  } else if (x >= xs_.back()) {
    i = n - 2;
  } else {
    i = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin()) - 1;
  }
  const double h = xs_[i + 1] - xs_[i];
  const double t = (x - xs_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
}

} // namespace waxman
