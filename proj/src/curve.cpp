#include "waxman/curve.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "waxman/errors.hpp"
#include "waxman/interpolation.hpp"

namespace waxman {

LambdaEpsilonCurve::LambdaEpsilonCurve(std::vector<CurveSample> samples, Sector sector)
    : samples_(std::move(samples)), sector_(sector) {
  if (samples_.empty()) throw std::invalid_argument("lambda-epsilon curve needs at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!(s.epsilon > 0.0)) throw std::invalid_argument("curve epsilons must be positive");
    if (!(s.lambda > 0.0) || !std::isfinite(s.lambda))
      throw std::invalid_argument("curve lambdas must be positive and finite");
    if (i > 0 && !(samples_[i - 1].epsilon < s.epsilon))
      throw std::invalid_argument("curve epsilons must be strictly increasing");
  }
}

double LambdaEpsilonCurve::min_lambda() const {
  return std::min_element(samples_.begin(), samples_.end(),
                          [](const auto& a, const auto& b) { return a.lambda < b.lambda; })
      ->lambda;
}

double LambdaEpsilonCurve::max_lambda() const {
  return std::max_element(samples_.begin(), samples_.end(),
                          [](const auto& a, const auto& b) { return a.lambda < b.lambda; })
      ->lambda;
}

bool SweepRecord::usable() const {
  return result && result->converged && result->lambda > 0.0 && std::isfinite(result->lambda);
}

namespace {

void require_strictly_increasing(std::span<const double> epsilons) {
  if (epsilons.empty()) throw std::invalid_argument("epsilon list is empty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw std::invalid_argument("epsilons must be positive");
    if (i > 0 && !(epsilons[i - 1] < epsilons[i]))
      throw std::invalid_argument("epsilons must be strictly increasing");
  }
}

SweepRecord run_point(double epsilon, const SampledFunction& potential, Sector sector, const WaxmanConfig& base) {
  WaxmanConfig cfg = base;
  cfg.epsilon = epsilon;
  cfg.sector = sector;
  SweepRecord record{epsilon, std::nullopt, {}};
  try {
    record.result = waxman_fixed_point(cfg, potential);
    if (!record.result->converged)
      record.failure = "no convergence after " + std::to_string(record.result->iterations) + " iterations";
    else if (!record.usable())
      record.failure = "non-positive coupling";
  } catch (const NumericalError& e) {
    record.failure = e.what();
  }
  return record;
}

} // namespace

SweepResult sweep_epsilon(std::span<const double> epsilons, const SampledFunction& potential, Sector sector,
                          const WaxmanConfig& base) {
  require_strictly_increasing(epsilons);
  std::vector<SweepRecord> records;
  records.reserve(epsilons.size());
  std::vector<CurveSample> samples;
  for (double eps : epsilons) {
    records.push_back(run_point(eps, potential, sector, base));
    if (records.back().usable()) samples.push_back({eps, records.back().result->lambda});
  }
  if (samples.empty())
    throw NumericalError("epsilon sweep in the " + to_string(sector) + " sector produced no converged point");
  return SweepResult{std::move(records), LambdaEpsilonCurve(std::move(samples), sector)};
}

std::vector<double> linear_epsilons(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

std::vector<double> log_epsilons(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0)) throw std::invalid_argument("log-spaced epsilons need lo > 0");
  std::vector<double> out = linear_epsilons(std::log(lo), std::log(hi), count);
  for (double& e : out) e = std::exp(e);
  if (count > 1) {
    out.front() = lo;
    out.back() = hi;
  }
  return out;
}

std::vector<double> geometric_tail(double start, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::ldexp(start, -static_cast<int>(i));
  return out;
}

namespace {

std::string format_lambda(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

} // namespace

double invert_curve(const LambdaEpsilonCurve& curve, double lambda_target) {
  if (!(lambda_target > 0.0)) throw std::invalid_argument("lambda target must be positive");
  auto samples = curve.samples();
  if (lambda_target < curve.min_lambda() || lambda_target > curve.max_lambda())
    throw NoSolutionError("no bound state at lambda=" + format_lambda(lambda_target) + " in the " +
                          to_string(curve.sector()) + " sector (sampled lambda range [" +
                          format_lambda(curve.min_lambda()) + ", " + format_lambda(curve.max_lambda()) + "])");

  for (const auto& s : samples)
    if (s.lambda == lambda_target) return s.epsilon;

  std::vector<double> xs, ys;
  for (const auto& s : samples) {
    xs.push_back(s.epsilon);
    ys.push_back(s.lambda);
  }
  const MonotoneCubic interp(xs, ys);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    double lo_gap = ys[i] - lambda_target;
    double hi_gap = ys[i + 1] - lambda_target;
    if ((lo_gap < 0.0) == (hi_gap < 0.0)) continue;
    double lo = xs[i];
    double hi = xs[i + 1];
    // The interpolant is monotone between knots, so bisection is exact.
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      double mid = 0.5 * (lo + hi);
      double gap = interp(mid) - lambda_target;
      if ((gap < 0.0) == (lo_gap < 0.0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  throw NoSolutionError("no bound state at lambda=" + format_lambda(lambda_target));
}

ThresholdFit threshold_lambda(const SampledFunction& potential, Sector sector, std::span<const double> epsilon_tail,
                              const WaxmanConfig& base, std::size_t fit_points) {
  if (sector != Sector::odd)
    throw std::invalid_argument("threshold search applies to the odd sector; the full-sector threshold is 0");
  if (epsilon_tail.size() < 3) throw std::invalid_argument("threshold fit needs at least 3 tail epsilons");
  if (fit_points < 3) throw std::invalid_argument("threshold fit needs at least 3 points");
  for (std::size_t i = 0; i < epsilon_tail.size(); ++i) {
    if (!(epsilon_tail[i] > 0.0)) throw std::invalid_argument("tail epsilons must be positive");
    if (i > 0 && !(epsilon_tail[i] < epsilon_tail[i - 1]))
      throw std::invalid_argument("tail epsilons must be strictly decreasing");
  }

  ThresholdFit fit;
  for (double eps : epsilon_tail) {
    SweepRecord record = run_point(eps, potential, sector, base);
    if (!record.usable())
      throw NumericalError("threshold tail failed at epsilon=" + format_lambda(eps) + ": " + record.failure);
    fit.tail.push_back({eps, record.result->lambda});
  }
  for (std::size_t i = 1; i < fit.tail.size(); ++i)
    if (!(fit.tail[i].lambda < fit.tail[i - 1].lambda))
      throw NumericalError("threshold tail does not settle monotonically at epsilon=" +
                           format_lambda(fit.tail[i].epsilon));

  const std::size_t used = std::min(fit_points, fit.tail.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = fit.tail.size() - used; i < fit.tail.size(); ++i) {
    double s = std::sqrt(fit.tail[i].epsilon);
    double y = fit.tail[i].lambda;
    sx += s;
    sy += y;
    sxx += s * s;
    sxy += s * y;
  }
  const double count = static_cast<double>(used);
  const double det = count * sxx - sx * sx;
  fit.slope = (count * sxy - sx * sy) / det;
  fit.lambda_star = (sy - fit.slope * sx) / count;
  return fit;
}

void write_curve_csv(std::ostream& out, const SweepResult& sweep) {
  out << "epsilon,lambda,iterations,residual,converged\n";
  std::ostringstream row;
  row << std::setprecision(17);
  for (const auto& record : sweep.records) {
    row.str({});
    row << record.epsilon << ',';
    if (record.result) {
      row << record.result->lambda << ',' << record.result->iterations << ',' << record.result->residual << ','
          << (record.usable() ? 1 : 0);
    } else {
      row << "nan,0,nan,0";
    }
    out << row.str() << '\n';
  }
}

} // namespace waxman
