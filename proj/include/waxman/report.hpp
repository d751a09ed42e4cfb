#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "waxman/curve.hpp"
#include "waxman/lanczos.hpp"

namespace waxman {

/// Reference numbers for the inverse Gaussian well V(x) = exp(-x^2/2) at
/// lambda = 1, as published for the Waxman/Lanczos comparison.
namespace published {
inline constexpr double waxman_ground_energy = -0.479203;
inline constexpr double lanczos_ground_energy = -0.475917;
inline constexpr double lanczos_spurious_energy = 0.529612;
inline constexpr double lanczos_ground_delta = 0.0218906;
inline constexpr double lanczos_spurious_delta = 2.09673;
inline constexpr double odd_threshold = 1.35348;
inline constexpr std::size_t lanczos_iterations = 18;
} // namespace published

/// Tolerances the reproduction is judged by.
namespace tolerance {
inline constexpr double waxman_ground = 2e-3;
inline constexpr double oracle_vs_waxman = 5e-4;
inline constexpr double oracle_step_halving = 1e-8;
inline constexpr double odd_threshold = 5e-3;
inline constexpr double lanczos_ground = 5e-3;
inline constexpr double delta_ratio = 10.0;
/// Residual bound in units of h^2.
inline constexpr double residual_h2 = 10.0;
} // namespace tolerance

struct ReproduceOptions {
  double half_width = 12.0;
  std::size_t n_points = 2401;
  double tol = 1e-10;
  /// Full-sector sweep used for the lambda = 1 inversion.
  double full_lo = 0.05, full_hi = 1.0;
  std::size_t full_count = 20;
  /// Odd-sector sweep on [odd_lo, odd_hi], log spaced.
  double odd_lo = 1e-4, odd_hi = 1.0;
  std::size_t odd_count = 20;
  /// Threshold tail tail_start * 2^-k, k < tail_count.
  double tail_start = 1e-3;
  std::size_t tail_count = 11;
  std::size_t tail_fit_points = 4;
  double shoot_step = 1e-3;
  std::size_t lanczos_m = published::lanczos_iterations;
  ClassifyOptions classify;
  /// When set, CSV artifacts are written here.
  std::optional<std::filesystem::path> out_dir;

  std::vector<std::string> echo() const;
};

struct ReportRow {
  std::string name;
  std::string computed;
  std::string reference;
  bool pass = false;
  std::string detail;
};

struct Reproduction {
  std::vector<ReportRow> rows;
  std::optional<SweepResult> full_sweep;
  std::optional<SweepResult> odd_sweep;
  std::optional<double> waxman_epsilon;
  std::optional<double> oracle_epsilon;
  std::optional<ThresholdFit> threshold;
  std::vector<std::vector<RitzPair>> lanczos_history;
  std::vector<PairLabel> lanczos_labels;

  bool all_pass() const;
  const ReportRow* row(const std::string& name) const;
};

/// Runs the whole comparison on the inverse Gaussian well: full-sector
/// sweep and inversion at lambda = 1, odd-sector sweep, inversion attempt
/// and threshold, Lanczos with Delta classification, shooting oracle. A
/// failing stage is reported on its rows and never stops the others.
Reproduction run_reproduce_paper(const ReproduceOptions& options = {});

void print_report(std::ostream& out, const ReproduceOptions& options, const Reproduction& reproduction);

} // namespace waxman
