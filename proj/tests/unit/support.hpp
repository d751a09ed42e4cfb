#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "waxman/grid.hpp"

namespace testsupport {

using Matrix = std::vector<std::vector<double>>;

struct DenseEigen {
  std::vector<double> values;
  /// Column j of `vectors` belongs to values[j].
  Matrix vectors;
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Slow but shares
// nothing with the tridiagonal QL solver it checks.
inline DenseEigen jacobi_eigen(Matrix a) {
  const std::size_t n = a.size();
  Matrix v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (i == j ? scale : off) += a[i][j] * a[i][j];
    if (off <= 1e-30 * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a[i][i] < a[j][j]; });
  DenseEigen out;
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    out.values.push_back(a[order[j]][order[j]]);
    for (std::size_t i = 0; i < n; ++i) out.vectors[i][j] = v[i][order[j]];
  }
  return out;
}

inline waxman::SampledFunction random_function(const waxman::Grid& grid, std::mt19937& rng, bool zero_ends = true) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  waxman::SampledFunction f(grid);
  for (std::size_t k = 0; k < grid.size(); ++k) f[k] = dist(rng);
  if (zero_ends) {
    f[0] = 0.0;
    f[grid.size() - 1] = 0.0;
  }
  return f;
}

inline double sech(double x) { return 1.0 / std::cosh(x); }

} // namespace testsupport
