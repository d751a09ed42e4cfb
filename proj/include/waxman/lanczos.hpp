#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "waxman/grid.hpp"
#include "waxman/potentials.hpp"

namespace waxman {

/// Grid Hamiltonian -d^2/dx^2 - lambda V(x) with the central second
/// difference and a Dirichlet closure (u = 0 just outside [-L, L]).
class Hamiltonian {
public:
  /// Keeps the analytic shape so the Lanczos recursion can resample V in
  /// extended precision.
  Hamiltonian(const PotentialSpec& shape, const Grid& grid, double lambda);
  Hamiltonian(SampledFunction potential, double lambda);

  const Grid& grid() const { return potential_.grid(); }
  const SampledFunction& potential() const { return potential_; }
  double lambda() const { return lambda_; }
  const std::optional<PotentialSpec>& shape() const { return shape_; }

  /// Gershgorin enclosure of the spectrum.
  std::pair<double, double> spectral_bounds() const;

private:
  SampledFunction potential_;
  double lambda_;
  std::optional<PotentialSpec> shape_;
};

SampledFunction hamiltonian_apply(const Hamiltonian& hamiltonian, const SampledFunction& u);

/// h * sum f_k g_k. The difference operator is symmetric in this inner
/// product; it agrees with the trapezoid rule when f g vanishes at +-L.
double lattice_inner_product(const SampledFunction& f, const SampledFunction& g);
double lattice_norm(const SampledFunction& f);

/// phi_1(x) = (2/pi)^(1/4) exp(-x^2), normalized to unit lattice norm.
SampledFunction start_vector(const Grid& grid);

/// Requests the Gaussian start vector above, sampled and normalized in
/// extended precision.
struct GaussianStart {};

using LanczosStart = std::variant<SampledFunction, GaussianStart>;

struct LanczosRun {
  std::vector<double> alphas;
  std::vector<double> betas;
  /// Orthonormal Lanczos vectors, rounded to double.
  std::vector<SampledFunction> basis;
  /// Completed iterations; alphas.size() == m, betas.size() == m - 1.
  std::size_t m = 0;
  std::size_t requested = 0;
  /// True when the recursion stopped on beta < 1e-12 (invariant subspace).
  bool breakdown = false;
};

/// Three-term Lanczos recursion with full reorthogonalization.
///
/// The recursion itself runs in 100-digit binary floating point. The
/// difference operator has norm ~4/h^2, so any rounding noise in the
/// high-wavenumber modes is amplified by that factor every step; in double
/// precision it swamps the Krylov space within a handful of iterations.
/// Smooth potentials and the Gaussian start vector are therefore sampled
/// directly in extended precision too.
LanczosRun lanczos_run(const Hamiltonian& hamiltonian, const LanczosStart& start, std::size_t m);

struct RitzPair {
  double value = 0.0;
  SampledFunction vector;
  double delta = 0.0;
  /// Lanczos iteration l the pair was extracted at.
  std::size_t iteration = 0;
};

/// Delta = |e^2 - <psi|H^2|psi>| with <psi|H^2|psi> evaluated as <H psi, H psi>.
/// For unit psi and e its Rayleigh quotient this is ||(H - e) psi||^2.
double delta_check(const RitzPair& pair, const Hamiltonian& hamiltonian);

/// Ritz pairs of the leading `iteration` x `iteration` block (ascending).
std::vector<RitzPair> ritz_pairs(const LanczosRun& run, const Hamiltonian& hamiltonian, std::size_t iteration);

/// Ritz pairs of the whole run.
std::vector<RitzPair> ritz_pairs(const LanczosRun& run, const Hamiltonian& hamiltonian);

/// Ritz pairs after every iteration 1..run.requested. Past a breakdown the
/// Krylov space is invariant and the last list repeats.
std::vector<std::vector<RitzPair>> ritz_history(const LanczosRun& run, const Hamiltonian& hamiltonian);

enum class PairLabel { genuine, spurious, undecided };
std::string to_string(PairLabel label);

struct ClassifyOptions {
  double tau_zero = 0.05;
  double tau_spur = 0.5;
  /// Max eigenvalue shift for two pairs in consecutive iterations to belong
  /// to the same track.
  double gate = 0.1;
  std::size_t window = 3;
};

/// Labels the pairs of the last iteration in `history` from their Delta
/// tracks. Tracks link pairs across iterations greedily by eigenvalue
/// proximity. Over the trailing window a track is
///   genuine   if its final Delta < tau_zero and has not risen over the window,
///   spurious  if every Delta in the window exceeds tau_spur,
///   undecided otherwise (including tracks shorter than the window).
/// Throws std::invalid_argument for fewer than `window` iterations.
std::vector<PairLabel> classify_pairs(std::span<const std::vector<RitzPair>> history,
                                      const ClassifyOptions& options = {});

/// CSV `iteration,ritz_index,value,delta,label`, 17 significant digits. The
/// label of a row uses the history up to that iteration.
void write_trace_csv(std::ostream& out, std::span<const std::vector<RitzPair>> history,
                     const ClassifyOptions& options = {});

} // namespace waxman
