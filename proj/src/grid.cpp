#include "waxman/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace waxman {

Grid::Grid(double half_width, std::size_t n_points)
    : half_width_(half_width), n_points_(n_points), spacing_(0.0) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("grid half_width must be positive, got " + std::to_string(half_width));
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("grid n_points must be odd and >= 3, got " + std::to_string(n_points));
  spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
}

double Grid::point(std::size_t k) const {
  // Signed offset from the centre keeps x_k = -x_{n-1-k} bit-exact.
  auto offset = static_cast<double>(static_cast<long long>(k) - static_cast<long long>(center()));
  return offset * spacing_;
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_points_);
  for (std::size_t k = 0; k < n_points_; ++k) xs[k] = point(k);
  return xs;
}

std::size_t Grid::node_index(double x) const {
  double offset = x / spacing_;
  double rounded = std::round(offset);
  if (std::abs(offset - rounded) > 1e-9 || std::abs(rounded) > static_cast<double>(center()))
    throw std::invalid_argument("x = " + std::to_string(x) + " is not a grid node");
  return static_cast<std::size_t>(static_cast<long long>(rounded) + static_cast<long long>(center()));
}

Grid make_grid(double half_width, std::size_t n_points) { return Grid(half_width, n_points); }

SampledFunction::SampledFunction(Grid grid) : grid_(grid), values_(grid.size(), 0.0) {}

SampledFunction::SampledFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("sampled function has " + std::to_string(values_.size()) +
                                " values but the grid has " + std::to_string(grid_.size()) + " nodes");
}

SampledFunction SampledFunction::sample(const Grid& grid, const std::function<double(double)>& f) {
  SampledFunction out(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) out.values_[k] = f(grid.point(k));
  return out;
}

bool SampledFunction::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

SampledFunction& SampledFunction::operator*=(double a) {
  for (double& v : values_) v *= a;
  return *this;
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

SampledFunction operator*(double a, SampledFunction f) { return f *= a; }
SampledFunction operator+(SampledFunction f, const SampledFunction& g) { return f += g; }
SampledFunction operator-(SampledFunction f, const SampledFunction& g) { return f -= g; }

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("sampled functions live on different grids");
}

double trapezoid_weight(const Grid& grid, std::size_t k) {
  double h = grid.spacing();
  return (k == 0 || k + 1 == grid.size()) ? 0.5 * h : h;
}

double integrate(const SampledFunction& f) {
  auto v = f.values();
  double interior = 0.0;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) interior += v[k];
  return f.grid().spacing() * (interior + 0.5 * (v.front() + v.back()));
}

double inner_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  auto a = f.values();
  auto b = g.values();
  double interior = 0.0;
  for (std::size_t k = 1; k + 1 < a.size(); ++k) interior += a[k] * b[k];
  // Each product is commutative, so the sum is symmetric bit-for-bit.
  double ends = 0.5 * (a.front() * b.front() + a.back() * b.back());
  return f.grid().spacing() * (interior + ends);
}

double sup_norm(const SampledFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f[k] - g[k]));
  return m;
}

} // namespace waxman
