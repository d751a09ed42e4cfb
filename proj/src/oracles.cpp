#include "waxman/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "waxman/errors.hpp"

namespace waxman {

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("unknown parity '" + text + "' (expected even or odd)");
}

PotentialEvaluator evaluator_for(const PotentialSpec& spec) {
  if (std::holds_alternative<TabulatedPotential>(spec))
    throw std::invalid_argument("shooting needs a pointwise potential; tables are not supported");
  return {[spec](double x) { return potential_value(spec, x); }, potential_breakpoints(spec), potential_max(spec)};
}

void ShootingConfig::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("shooting lambda must be positive");
  if (!(half_width > 0.0)) throw std::invalid_argument("shooting half_width must be positive");
  if (!(step > 0.0)) throw std::invalid_argument("shooting step must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("shooting tol must be positive");
  if (scan_points < 2) throw std::invalid_argument("shooting scan needs at least 2 points");
  if (initial_amplitude == 0.0) throw std::invalid_argument("initial amplitude must be nonzero");
  if (bracket && !(bracket->first > 0.0 && bracket->first < bracket->second))
    throw std::invalid_argument("shooting bracket must satisfy 0 < lo < hi");
}

double shoot_mismatch(const ShootingConfig& cfg, const PotentialEvaluator& potential, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("shooting epsilon must be positive");
  const double lambda = cfg.lambda;

  std::vector<double> edges{0.0};
  for (double b : potential.breakpoints)
    if (b > 0.0 && b < cfg.half_width) edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.push_back(cfg.half_width);

  double u = cfg.parity == Parity::even ? cfg.initial_amplitude : 0.0;
  double du = cfg.parity == Parity::even ? 0.0 : cfg.initial_amplitude;
  double peak = std::abs(u);

  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double lo = edges[s];
    const double hi = edges[s + 1];
    // Sample V strictly inside the segment so jumps take their one-sided limit.
    const double inner_lo = std::nextafter(lo, hi);
    const double inner_hi = std::nextafter(hi, lo);
    auto force = [&](double x) {
      return epsilon - lambda * potential.value(std::clamp(x, inner_lo, inner_hi));
    };
    const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / cfg.step));
    const double h = (hi - lo) / static_cast<double>(steps);
    for (std::size_t i = 0; i < steps; ++i) {
      const double x = lo + static_cast<double>(i) * h;
      const double f0 = force(x);
      const double fm = force(x + 0.5 * h);
      const double f1 = force(x + h);
      const double k1u = du, k1d = f0 * u;
      const double k2u = du + 0.5 * h * k1d, k2d = fm * (u + 0.5 * h * k1u);
      const double k3u = du + 0.5 * h * k2d, k3d = fm * (u + 0.5 * h * k2u);
      const double k4u = du + h * k3d, k4d = f1 * (u + h * k3u);
      u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
      du += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
      peak = std::max(peak, std::abs(u));
      if (peak > 1e100) {
        u /= peak;
        du /= peak;
        peak = 1.0;
      }
    }
  }
  return (du + std::sqrt(epsilon) * u) / peak;
}

double shooting_eigenvalue(const ShootingConfig& cfg, const PotentialEvaluator& potential) {
  cfg.validate();
  const auto [lo, hi] = cfg.bracket.value_or(std::pair{1e-4, cfg.lambda * potential.max_value});
  if (!(lo < hi)) throw NoSolutionError("empty shooting bracket for lambda=" + std::to_string(cfg.lambda));

  const std::size_t n = cfg.scan_points;
  std::vector<double> eps(n), mismatch(n);
  for (std::size_t i = 0; i < n; ++i) {
    eps[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    mismatch[i] = shoot_mismatch(cfg, potential, eps[i]);
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    if (mismatch[i] == 0.0) return eps[i];
    if ((mismatch[i] < 0.0) == (mismatch[i + 1] < 0.0)) continue;
    double a = eps[i], b = eps[i + 1];
    const bool a_negative = mismatch[i] < 0.0;
    while (b - a > cfg.tol) {
      double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      double m = shoot_mismatch(cfg, potential, mid);
      if ((m < 0.0) == a_negative) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  }
  std::ostringstream msg;
  msg << "no level in bracket (" << lo << ", " << hi << ") for lambda=" << cfg.lambda << ", "
      << to_string(cfg.parity) << " parity";
  throw NoSolutionError(msg.str());
}

namespace {

double poschl_teller_level(double lambda, std::size_t index) {
  const double s = 0.5 * (std::sqrt(1.0 + 4.0 * lambda) - 1.0);
  const double n = static_cast<double>(index);
  if (!(n < s))
    throw NoSolutionError("Poschl-Teller well at lambda=" + std::to_string(lambda) + " has no level " +
                          std::to_string(index));
  return (s - n) * (s - n);
}

double square_well_level(double a, double lambda, std::size_t index) {
  const double kmax = std::sqrt(lambda);
  const double n = static_cast<double>(index);
  const double left = n * std::numbers::pi / (2.0 * a);
  if (!(left < kmax))
    throw NoSolutionError("square well at lambda=" + std::to_string(lambda) + " has no level " +
                          std::to_string(index));
  const bool even = index % 2 == 0;
  // Negative at the left end of the branch, positive at its right end.
  auto f = [&](double k) {
    double outside = std::sqrt(std::max(lambda - k * k, 0.0));
    double inside = even ? k * std::tan(k * a) : -k / std::tan(k * a);
    return inside - outside;
  };
  const double pole = (n + 1.0) * std::numbers::pi / (2.0 * a);
  double lo = left;
  double hi = std::min(pole, kmax);
  if (hi == pole) hi = std::nextafter(pole, 0.0);
  if (index > 0 && !even) lo = std::nextafter(left, hi);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double k = 0.5 * (lo + hi);
  return lambda - k * k;
}

} // namespace

double analytic_level(const PotentialSpec& spec, double lambda, std::size_t index) {
  if (!(lambda > 0.0)) throw std::invalid_argument("analytic_level: lambda must be positive");
  if (std::holds_alternative<PoschlTellerWell>(spec)) return poschl_teller_level(lambda, index);
  if (const auto* well = std::get_if<SquareWell>(&spec)) return square_well_level(well->a, lambda, index);
  throw std::invalid_argument("no closed-form levels for potential " + potential_name(spec));
}

} // namespace waxman
