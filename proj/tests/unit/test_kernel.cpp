#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "waxman/greens.hpp"
#include "waxman/potentials.hpp"

using namespace waxman;
using testsupport::sech;

namespace {

// Direct O(n^2) trapezoid sum, the definition apply_kernel must reproduce.
SampledFunction dense_apply(double eps, const SampledFunction& v, const SampledFunction& u) {
  const Grid& g = u.grid();
  GreensKernel full(eps);
  SampledFunction out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
      s += trapezoid_weight(g, j) * full(g.point(i), g.point(j)) * v[j] * u[j];
    out[i] = s;
  }
  return out;
}

SampledFunction odd_part(const SampledFunction& u) {
  SampledFunction out(u.grid());
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = 0.5 * (u[k] - u[u.grid().mirror(k)]);
  return out;
}

double weak_ode_error(std::size_t n, double eps) {
  Grid g(8.0, n);
  const double h = g.spacing();
  auto f = SampledFunction::sample(g, [](double x) { return std::exp(-x * x) * (1.0 + 0.3 * x); });
  SampledFunction rhs(g);
  for (std::size_t k = 0; k < n; ++k) {
    double left = k > 0 ? f[k - 1] : 0.0;
    double right = k + 1 < n ? f[k + 1] : 0.0;
    rhs[k] = -(left - 2 * f[k] + right) / (h * h) + eps * f[k];
  }
  auto one = SampledFunction::sample(g, [](double) { return 1.0; });
  return sup_distance(apply_kernel(GreensKernel(eps), one, rhs), f);
}

} // namespace

TEST_CASE("kernel closed form") {
  CHECK(kernel_value(GreensKernel(1.0), 0.3, 0.3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kernel_value(GreensKernel(4.0), 0.0, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(kernel_value(GreensKernel(1.0), 0.0, 2.0) == doctest::Approx(std::exp(-2.0) / 2).epsilon(1e-15));
  GreensKernel odd(0.7, Sector::odd);
  for (double xp : {-3.0, 0.0, 0.1, 5.0}) CHECK(odd(0.0, xp) == 0.0);
  CHECK(odd(1.0, 2.0) == doctest::Approx(GreensKernel(0.7)(1.0, 2.0) - GreensKernel(0.7)(1.0, -2.0)));
  CHECK_THROWS_AS(GreensKernel(0.0), std::invalid_argument);
  CHECK_THROWS_AS(GreensKernel(-1.0), std::invalid_argument);
}

TEST_CASE("sector names") {
  CHECK(parse_sector("full") == Sector::full);
  CHECK(parse_sector("even") == Sector::full);
  CHECK(parse_sector("odd") == Sector::odd);
  CHECK_THROWS_AS(parse_sector("sideways"), std::invalid_argument);
  CHECK(to_string(Sector::odd) == "odd");
}

TEST_CASE("kernel inverts the shifted second difference to O(h^2)") {
  for (double eps : {0.3, 1.0, 2.5}) {
    double coarse = weak_ode_error(401, eps);
    double fine = weak_ode_error(801, eps);
    CHECK(coarse < 1e-3);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("fast application matches the dense quadrature") {
  std::mt19937 rng(3);
  Grid g(6.0, 121);
  auto v = sample_potential(GaussianWell{}, g);
  for (double eps : {0.05, 0.48, 3.0}) {
    auto u = testsupport::random_function(g, rng, false);
    auto dense = dense_apply(eps, v, u);
    CHECK(sup_distance(apply_kernel(GreensKernel(eps), v, u), dense) <= 1e-12 * (1.0 + sup_norm(dense)));
    for (double x : {-6.0, -1.0, 0.0, 2.5}) CHECK(apply_kernel_at(GreensKernel(eps), v, u, x) == doctest::Approx(dense.at(x)).epsilon(1e-12));
  }
}

TEST_CASE("odd sector equals the full kernel acting on the odd part") {
  std::mt19937 rng(4);
  Grid g(6.0, 121);
  auto v = sample_potential(GaussianWell{}, g);
  for (double eps : {0.01, 0.5, 2.0}) {
    auto u = testsupport::random_function(g, rng, false);
    auto expected = dense_apply(eps, v, odd_part(u));
    auto got = apply_kernel(GreensKernel(eps, Sector::odd), v, u);
    CHECK(sup_distance(got, expected) <= 1e-12 * (1.0 + sup_norm(expected)));
    CHECK(got[g.center()] == 0.0);
    CHECK(apply_kernel_at(GreensKernel(eps, Sector::odd), v, u, 1.0) == doctest::Approx(expected.at(1.0)).epsilon(1e-12));
  }
}

TEST_CASE("poschl-teller eigenfunction maps to half of itself") {
  Grid g(12.0, 2401);
  auto v = sample_potential(PoschlTellerWell{}, g);
  auto u = SampledFunction::sample(g, sech);
  auto w = apply_kernel(GreensKernel(1.0), v, u);
  CHECK(sup_distance(w, 0.5 * u) <= 2e-4);
}

TEST_CASE("kernel application is linear") {
  std::mt19937 rng(8);
  Grid g(12.0, 2401);
  auto v = sample_potential(GaussianWell{}, g);
  auto zero = apply_kernel(GreensKernel(0.5), v, SampledFunction(g));
  CHECK(sup_norm(zero) == 0.0);
  auto u = testsupport::random_function(g, rng);
  auto w = apply_kernel(GreensKernel(0.5), v, u);
  for (double a : {-2.5, 1e-3, 7.0}) {
    auto wa = apply_kernel(GreensKernel(0.5), v, a * u);
    CHECK(sup_distance(wa, a * w) <= 1e-12 * std::abs(a) * sup_norm(w));
  }
  CHECK_THROWS_AS(apply_kernel(GreensKernel(0.5), v, SampledFunction(Grid(1.0, 3))), std::invalid_argument);
}
