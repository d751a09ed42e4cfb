#pragma once

#include <span>
#include <vector>

namespace waxman {

struct TridiagonalEigenpair {
  double value;
  /// Unit-norm eigenvector in the Lanczos coefficient basis.
  std::vector<double> vector;
};

/// All eigenpairs of the symmetric tridiagonal matrix with diagonal `alphas`
/// and off-diagonal `betas` (size alphas.size() - 1), ascending by value.
/// Implicit QL with Wilkinson shifts.
std::vector<TridiagonalEigenpair> tridiagonal_eigen(std::span<const double> alphas, std::span<const double> betas);

} // namespace waxman
