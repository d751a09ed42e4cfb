#include "waxman/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "waxman/errors.hpp"

namespace waxman {

std::vector<TridiagonalEigenpair> tridiagonal_eigen(std::span<const double> alphas, std::span<const double> betas) {
  const std::size_t n = alphas.size();
  if (n == 0) return {};
  if (betas.size() + 1 != n) throw std::invalid_argument("tridiagonal_eigen: need alphas.size() - 1 betas");

  std::vector<double> d(alphas.begin(), alphas.end());
  std::vector<double> e(n, 0.0);
  std::copy(betas.begin(), betas.end(), e.begin());
  // z holds eigenvectors column-wise: z[row * n + col].
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++sweeps > 60) throw NumericalError("tridiagonal_eigen: QL iteration did not converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (std::size_t k = 0; k < n; ++k) {
          f = z[k * n + i + 1];
          z[k * n + i + 1] = s * z[k * n + i] + c * f;
          z[k * n + i] = c * z[k * n + i] - s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  std::vector<TridiagonalEigenpair> out;
  out.reserve(n);
  for (std::size_t col : order) {
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = z[k * n + col];
    // Fix the sign so the first sizeable component is positive.
    auto lead = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-8; });
    if (lead != v.end() && *lead < 0.0)
      for (double& x : v) x = -x;
    out.push_back({d[col], std::move(v)});
  }
  return out;
}

} // namespace waxman
