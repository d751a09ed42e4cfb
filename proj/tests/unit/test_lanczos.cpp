#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "support.hpp"
#include "waxman/lanczos.hpp"

using namespace waxman;
using testsupport::sech;

namespace {

const Grid& default_grid() {
  static const Grid g(12.0, 2401);
  return g;
}

struct GaussianRun {
  Hamiltonian hamiltonian{GaussianWell{}, default_grid(), 1.0};
  LanczosRun run = lanczos_run(hamiltonian, GaussianStart{}, 18);
  std::vector<std::vector<RitzPair>> history = ritz_history(run, hamiltonian);
};

const GaussianRun& gaussian_run() {
  static const GaussianRun r;
  return r;
}

SampledFunction normalized(SampledFunction f) {
  f *= 1.0 / lattice_norm(f);
  return f;
}

// Lowest Dirichlet mode of the difference Laplacian. The closure puts the
// zero boundary one spacing outside [-L, L].
SampledFunction box_mode(const Grid& g) {
  const double width = 2.0 * g.half_width() + 2.0 * g.spacing();
  return normalized(SampledFunction::sample(g, [&](double x) {
    return std::sin(std::numbers::pi * (x + g.half_width() + g.spacing()) / width);
  }));
}

} // namespace

TEST_CASE("hamiltonian on the poschl-teller ground state") {
  const auto& g = default_grid();
  Hamiltonian h(PoschlTellerWell{}, g, 2.0);
  auto u = SampledFunction::sample(g, sech);
  auto hu = hamiltonian_apply(h, u);
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < g.size(); ++k) worst = std::max(worst, std::abs(hu[k] + u[k]));
  CHECK(worst <= 3e-4);
  CHECK(sup_norm(hamiltonian_apply(h, SampledFunction(g))) == 0.0);
}

TEST_CASE("free hamiltonian on a sine mode") {
  Grid g(3.0, 301);
  Hamiltonian h(SampledFunction(g), 1.0);
  auto u = SampledFunction::sample(g, [&](double x) { return std::sin(std::numbers::pi * x / 3.0); });
  auto hu = hamiltonian_apply(h, u);
  const double k2 = std::pow(std::numbers::pi / 3.0, 2);
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < g.size(); ++k) worst = std::max(worst, std::abs(hu[k] - k2 * u[k]));
  CHECK(worst <= k2 * k2 * g.spacing() * g.spacing());
}

TEST_CASE("hamiltonian is symmetric") {
  std::mt19937 rng(31);
  Grid g(5.0, 201);
  Hamiltonian h(GaussianWell{}, g, 1.3);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = testsupport::random_function(g, rng);
    auto q = testsupport::random_function(g, rng);
    double a = lattice_inner_product(f, hamiltonian_apply(h, q));
    double b = lattice_inner_product(hamiltonian_apply(h, f), q);
    CHECK(std::abs(a - b) <= 1e-10 * (std::abs(a) + std::abs(b)));
  }
  CHECK_THROWS_AS(Hamiltonian(GaussianWell{}, g, 0.0), std::invalid_argument);
}

TEST_CASE("start vector") {
  const auto& g = default_grid();
  auto phi = start_vector(g);
  CHECK(phi.at(0.0) == doctest::Approx(std::pow(2.0 / std::numbers::pi, 0.25)).epsilon(1e-9));
  CHECK(std::abs(inner_product(phi, phi) - 1.0) <= 1e-12);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(phi[k] == phi[g.mirror(k)]);
}

TEST_CASE("gaussian run keeps an orthonormal basis") {
  const auto& r = gaussian_run();
  REQUIRE(r.run.m == 18);
  CHECK(r.run.alphas.size() == 18);
  CHECK(r.run.betas.size() == 17);
  for (double b : r.run.betas) CHECK(b > 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < r.run.m; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      worst = std::max(worst, std::abs(lattice_inner_product(r.run.basis[i], r.run.basis[j]) - (i == j ? 1.0 : 0.0)));
  CHECK(worst <= 1e-8);
}

TEST_CASE("gaussian run ground state and a positive spurious value") {
  const auto& pairs = gaussian_run().history.back();
  CHECK(std::abs(pairs.front().value - (-0.475917)) <= 5e-3);
  bool positive = false;
  for (const auto& p : pairs) positive = positive || p.value > 0.0;
  CHECK(positive);
  for (const auto& p : pairs) {
    CHECK(p.delta >= 0.0);
    CHECK(lattice_norm(p.vector) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(p.iteration == 18);
  }
}

TEST_CASE("minimum Ritz value never rises") {
  const auto& h = gaussian_run().history;
  for (std::size_t l = 1; l < h.size(); ++l) CHECK(h[l].front().value <= h[l - 1].front().value + 1e-12);
}

TEST_CASE("Ritz values lie inside the Gershgorin enclosure") {
  const auto& r = gaussian_run();
  auto [lo, hi] = r.hamiltonian.spectral_bounds();
  for (const auto& list : r.history)
    for (const auto& p : list) {
      CHECK(p.value >= lo);
      CHECK(p.value <= hi);
    }
}

TEST_CASE("classification of the gaussian run") {
  const auto& r = gaussian_run();
  auto labels = classify_pairs(r.history);
  const auto& pairs = r.history.back();
  CHECK(labels.front() == PairLabel::genuine);
  std::optional<std::size_t> spurious;
  for (std::size_t b = 0; b < pairs.size() && !spurious; ++b)
    if (pairs[b].value > 0.0 && labels[b] == PairLabel::spurious) spurious = b;
  REQUIRE(spurious.has_value());
  CHECK(pairs[*spurious].delta / pairs.front().delta >= 10.0);
}

TEST_CASE("delta equals the squared residual norm for unit vectors") {
  std::mt19937 rng(32);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  Grid g(4.0, 81);
  Hamiltonian h(GaussianWell{}, g, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto psi = normalized(testsupport::random_function(g, rng));
    double value = lattice_inner_product(psi, hamiltonian_apply(h, psi)) + shift(rng) * (trial % 2);
    RitzPair p{value, psi, 0.0, 0};
    auto r = hamiltonian_apply(h, p.vector) - p.value * p.vector;
    double expected = lattice_inner_product(r, r);
    if (trial % 2 == 0) CHECK(std::abs(delta_check(p, h) - expected) <= 1e-10 * expected);
    CHECK(delta_check(p, h) >= 0.0);
  }
}

TEST_CASE("exact eigenvector start") {
  Grid g(3.0, 61);
  Hamiltonian h(SampledFunction(g), 1.0);
  auto mode = box_mode(g);
  auto run = lanczos_run(h, mode, 5);
  CHECK(run.breakdown);
  CHECK(run.m == 1);
  CHECK(run.betas.empty());
  const double hs = g.spacing();
  const double exact = (2.0 - 2.0 * std::cos(std::numbers::pi * hs / (2.0 * g.half_width() + 2.0 * hs))) / (hs * hs);
  CHECK(run.alphas[0] == doctest::Approx(exact).epsilon(1e-12));
  auto pairs = ritz_pairs(run, h);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].delta <= 1e-8);
  CHECK(delta_check(pairs[0], h) <= 1e-10);

  auto history = ritz_history(run, h);
  CHECK(history.size() == 5);
  for (std::size_t len = 3; len <= history.size(); ++len) {
    auto labels = classify_pairs(std::span(history).first(len));
    CHECK(labels == std::vector<PairLabel>{PairLabel::genuine});
  }
}

TEST_CASE("full Krylov space reproduces the dense spectrum") {
  std::mt19937 rng(33);
  Grid g(5.0, 101);
  Hamiltonian h(GaussianWell{}, g, 1.0);
  auto start = normalized(testsupport::random_function(g, rng, false));
  auto run = lanczos_run(h, start, g.size());
  REQUIRE(run.m == g.size());

  const std::size_t n = g.size();
  const double inv_h2 = 1.0 / (g.spacing() * g.spacing());
  testsupport::Matrix dense(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    dense[i][i] = 2.0 * inv_h2 - h.potential()[i];
    if (i + 1 < n) dense[i][i + 1] = dense[i + 1][i] = -inv_h2;
  }
  auto oracle = testsupport::jacobi_eigen(dense);
  auto pairs = ritz_pairs(run, h);
  REQUIRE(pairs.size() == n);
  for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(pairs[j].value - oracle.values[j]) <= 1e-8);
}

TEST_CASE("run preconditions") {
  Grid g(3.0, 61);
  Hamiltonian h(GaussianWell{}, g, 1.0);
  CHECK_THROWS_AS(lanczos_run(h, GaussianStart{}, 0), std::invalid_argument);
  CHECK_THROWS_AS(lanczos_run(h, SampledFunction::sample(g, [](double) { return 1.0; }), 3), std::invalid_argument);
}

TEST_CASE("classification needs enough history") {
  const auto& h = gaussian_run().history;
  CHECK_THROWS_AS(classify_pairs(std::span(h).first(2)), std::invalid_argument);
  CHECK_NOTHROW(classify_pairs(std::span(h).first(3)));
}

TEST_CASE("trace CSV") {
  const auto& h = gaussian_run().history;
  std::ostringstream a, b;
  write_trace_csv(a, h);
  write_trace_csv(b, h);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "iteration,ritz_index,value,delta,label");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 18 * 19 / 2);
  CHECK(a.str().find("spurious") != std::string::npos);
  CHECK(to_string(PairLabel::undecided) == "undecided");
}
