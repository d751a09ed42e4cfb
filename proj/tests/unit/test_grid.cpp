#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "waxman/grid.hpp"

using namespace waxman;

TEST_CASE("three-point grid") {
  Grid g = make_grid(1.0, 3);
  CHECK(g.spacing() == 1.0);
  CHECK(g.point(0) == -1.0);
  CHECK(g.point(1) == 0.0);
  CHECK(g.point(2) == 1.0);
}

TEST_CASE("default grid spacing") {
  Grid g(12.0, 2401);
  CHECK(g.spacing() == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(std::abs(g.spacing() * 2400 - 24.0) <= 1e-12 * 12.0);
}

TEST_CASE("grid rejects bad shapes") {
  CHECK_THROWS_AS(Grid(12.0, 2400), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 11), std::invalid_argument);
  CHECK_THROWS_AS(Grid(-1.0, 11), std::invalid_argument);
  CHECK_THROWS_AS(Grid(1.0, 1), std::invalid_argument);
}

TEST_CASE("grid points are symmetric, increasing and centered") {
  for (std::size_t n : {3u, 11u, 101u, 2401u}) {
    Grid g(7.5, n);
    auto pts = g.points();
    CHECK(pts[g.center()] == 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(pts[k] + pts[g.mirror(k)]) <= 1e-12 * 7.5);
      if (k > 0) {
        CHECK(pts[k] > pts[k - 1]);
        CHECK(std::abs(pts[k] - pts[k - 1] - g.spacing()) <= 1e-12 * 7.5);
      }
    }
  }
}

TEST_CASE("node lookup") {
  Grid g(12.0, 2401);
  CHECK(g.node_index(0.0) == 1200);
  CHECK(g.node_index(1.0) == 1300);
  CHECK(g.node_index(-12.0) == 0);
  CHECK_THROWS_AS(g.node_index(0.005), std::invalid_argument);
  CHECK_THROWS_AS(g.node_index(13.0), std::invalid_argument);
}

TEST_CASE("sampled function length must match") {
  Grid g(1.0, 5);
  CHECK_THROWS_AS(SampledFunction(g, {1.0, 2.0}), std::invalid_argument);
  SampledFunction f(g);
  CHECK(f.size() == 5);
}

TEST_CASE("integrate constants and odd functions") {
  Grid g(5.0, 101);
  CHECK(integrate(SampledFunction::sample(g, [](double) { return 1.0; })) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(std::abs(integrate(SampledFunction::sample(g, [](double x) { return x; }))) <= 1e-12);
  // Trapezoid is exact for affine integrands.
  CHECK(integrate(SampledFunction::sample(g, [](double x) { return 3.0 * x + 2.0; })) ==
        doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("gaussian integral on the default grid") {
  Grid g(12.0, 2401);
  double value = integrate(SampledFunction::sample(g, [](double x) { return std::exp(-x * x / 2); }));
  CHECK(std::abs(value - std::sqrt(2 * std::numbers::pi)) <= 1e-8);
}

TEST_CASE("inner products") {
  Grid g5(5.0, 101);
  auto one = SampledFunction::sample(g5, [](double) { return 1.0; });
  CHECK(inner_product(one, one) == doctest::Approx(10.0).epsilon(1e-14));

  Grid g(12.0, 2401);
  auto phi = SampledFunction::sample(g, [](double x) { return std::pow(2 / std::numbers::pi, 0.25) * std::exp(-x * x); });
  CHECK(std::abs(inner_product(phi, phi) - 1.0) <= 1e-8);

  CHECK_THROWS_AS(inner_product(one, phi), std::invalid_argument);
}

TEST_CASE("inner product is symmetric and positive on random data") {
  std::mt19937 rng(11);
  Grid g(3.0, 61);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = testsupport::random_function(g, rng, false);
    auto h = testsupport::random_function(g, rng, false);
    CHECK(inner_product(f, h) == inner_product(h, f));
    CHECK(inner_product(f, f) >= 0.0);
  }
}

TEST_CASE("integration is linear") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  Grid g(4.0, 81);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = testsupport::random_function(g, rng, false);
    auto h = testsupport::random_function(g, rng, false);
    double a = coef(rng), b = coef(rng);
    double lhs = integrate(a * f + b * h);
    double rhs = a * integrate(f) + b * integrate(h);
    double scale = std::abs(a * integrate(f)) + std::abs(b * integrate(h)) + 1.0;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("trapezoid error falls by four when h halves") {
  // Integrand that is not negligible at the edges, so the O(h^2) term shows.
  auto f = [](double x) { return std::cos(x); };
  double exact = 2 * std::sin(2.0);
  double e1 = std::abs(integrate(SampledFunction::sample(Grid(2.0, 41), f)) - exact);
  double e2 = std::abs(integrate(SampledFunction::sample(Grid(2.0, 81), f)) - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("sampled function arithmetic") {
  Grid g(1.0, 5);
  SampledFunction f(g, {1, 2, 3, 4, 5});
  SampledFunction h(g, {5, 4, 3, 2, 1});
  auto s = f + h;
  for (std::size_t k = 0; k < 5; ++k) CHECK(s[k] == 6.0);
  auto d = f - h;
  CHECK(d[0] == -4.0);
  CHECK((2.0 * f)[4] == 10.0);
  CHECK(sup_norm(d) == 4.0);
  CHECK(sup_distance(f, h) == 4.0);
  CHECK(f.at(0.5) == 4.0);
  CHECK(f.all_finite());
  f[2] = std::nan("");
  CHECK_FALSE(f.all_finite());
  SampledFunction other(Grid(2.0, 5));
  CHECK_THROWS_AS(f += other, std::invalid_argument);
}
