#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "waxman/fixed_point.hpp"
#include "waxman/greens.hpp"

namespace waxman {

struct CurveSample {
  double epsilon;
  double lambda;
};

/// Sampled coupling-energy relation lambda(epsilon) in one sector.
/// Epsilons are strictly increasing and positive; lambdas positive and finite.
class LambdaEpsilonCurve {
public:
  LambdaEpsilonCurve(std::vector<CurveSample> samples, Sector sector);

  std::span<const CurveSample> samples() const { return samples_; }
  Sector sector() const { return sector_; }
  std::size_t size() const { return samples_.size(); }

  double min_lambda() const;
  double max_lambda() const;

private:
  std::vector<CurveSample> samples_;
  Sector sector_;
};

/// Outcome of one fixed-point run inside a sweep. A failed point keeps its
/// epsilon and the error message; it never contributes to the curve.
struct SweepRecord {
  double epsilon = 0.0;
  std::optional<WaxmanResult> result;
  std::string failure;

  bool usable() const;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  LambdaEpsilonCurve curve;
};

/// One waxman_fixed_point per epsilon (strictly increasing, positive) in the
/// given sector, with tolerances and x_ref taken from `base`. Non-converged
/// or failed points are gaps. Throws NumericalError if nothing survives.
SweepResult sweep_epsilon(std::span<const double> epsilons, const SampledFunction& potential, Sector sector,
                          const WaxmanConfig& base = {});

/// count epsilons evenly spaced on [lo, hi].
std::vector<double> linear_epsilons(double lo, double hi, std::size_t count);

/// count epsilons evenly spaced in log(epsilon) on [lo, hi].
std::vector<double> log_epsilons(double lo, double hi, std::size_t count);

/// start, start/2, start/4, ... (count values).
std::vector<double> geometric_tail(double start, std::size_t count);

/// Epsilon at which the monotone cubic interpolant of lambda(epsilon) hits
/// lambda_target, found by bisection on the interpolant inside the first
/// bracketing knot interval. Throws NoSolutionError if lambda_target lies
/// outside the sampled lambda range.
double invert_curve(const LambdaEpsilonCurve& curve, double lambda_target);

struct ThresholdFit {
  double lambda_star = 0.0;
  /// Coefficient c of lambda = lambda_star + c sqrt(epsilon).
  double slope = 0.0;
  std::vector<CurveSample> tail;
};

/// Threshold coupling of the odd sector: evaluates lambda(epsilon) along a
/// decreasing epsilon tail and extrapolates to epsilon -> 0+ with a
/// least-squares fit of lambda = lambda_star + c sqrt(epsilon) over the last
/// `fit_points` samples.
ThresholdFit threshold_lambda(const SampledFunction& potential, Sector sector, std::span<const double> epsilon_tail,
                              const WaxmanConfig& base = {}, std::size_t fit_points = 4);

/// CSV with header `epsilon,lambda,iterations,residual,converged`, one row per
/// sweep point, 17 significant digits. Failed points print nan.
void write_curve_csv(std::ostream& out, const SweepResult& sweep);

} // namespace waxman
