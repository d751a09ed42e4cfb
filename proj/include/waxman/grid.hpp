#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace waxman {

/// Uniform mesh on [-L, L] with an odd number of nodes, so that x = 0 is
/// always a node. Node k sits at (k - center) * spacing.
class Grid {
public:
  Grid(double half_width, std::size_t n_points);

  double half_width() const { return half_width_; }
  std::size_t size() const { return n_points_; }
  double spacing() const { return spacing_; }
  std::size_t center() const { return (n_points_ - 1) / 2; }

  double point(std::size_t k) const;
  std::vector<double> points() const;

  /// Index of the node at coordinate x. Throws std::invalid_argument if x is
  /// not a node (to within 1e-9 of the spacing).
  std::size_t node_index(double x) const;

  /// Index of the mirror node -x_k.
  std::size_t mirror(std::size_t k) const { return n_points_ - 1 - k; }

  bool operator==(const Grid& other) const = default;

private:
  double half_width_;
  std::size_t n_points_;
  double spacing_;
};

Grid make_grid(double half_width, std::size_t n_points);

/// Real samples of a function on the nodes of a Grid.
class SampledFunction {
public:
  explicit SampledFunction(Grid grid);
  SampledFunction(Grid grid, std::vector<double> values);

  static SampledFunction sample(const Grid& grid, const std::function<double(double)>& f);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double operator[](std::size_t k) const { return values_[k]; }
  double& operator[](std::size_t k) { return values_[k]; }

  /// Value at the node with coordinate x.
  double at(double x) const { return values_[grid_.node_index(x)]; }

  bool all_finite() const;

  SampledFunction& operator*=(double a);
  SampledFunction& operator+=(const SampledFunction& other);
  SampledFunction& operator-=(const SampledFunction& other);

private:
  Grid grid_;
  std::vector<double> values_;
};

SampledFunction operator*(double a, SampledFunction f);
SampledFunction operator+(SampledFunction f, const SampledFunction& g);
SampledFunction operator-(SampledFunction f, const SampledFunction& g);

/// Throws std::invalid_argument unless both functions live on the same grid.
void require_same_grid(const SampledFunction& f, const SampledFunction& g);

/// Trapezoid weight of node k.
double trapezoid_weight(const Grid& grid, std::size_t k);

/// Trapezoid rule over [-L, L]. Exact for affine integrands.
double integrate(const SampledFunction& f);

/// Trapezoid approximation of the integral of f * g.
double inner_product(const SampledFunction& f, const SampledFunction& g);

double sup_norm(const SampledFunction& f);
double sup_distance(const SampledFunction& f, const SampledFunction& g);

} // namespace waxman
