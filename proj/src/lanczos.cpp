#include "waxman/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "waxman/tridiagonal.hpp"

namespace waxman {

namespace {

namespace mp = boost::multiprecision;
using Extended = mp::number<mp::cpp_bin_float<100>, mp::et_off>;
using ExtendedVector = std::vector<Extended>;

bool has_extended_form(const PotentialSpec& shape) {
  return std::holds_alternative<GaussianWell>(shape) || std::holds_alternative<PoschlTellerWell>(shape);
}

Extended extended_point(const Grid& grid, std::size_t k) {
  Extended h = Extended(2.0 * grid.half_width()) / Extended(static_cast<double>(grid.size() - 1));
  return Extended(static_cast<double>(static_cast<long long>(k) - static_cast<long long>(grid.center()))) * h;
}

// The extended-precision counterpart of a Hamiltonian.
struct ExtendedOperator {
  ExtendedVector coupling; // lambda * V
  Extended inv_h2;
  Extended h;

  explicit ExtendedOperator(const Hamiltonian& hamiltonian) {
    const Grid& grid = hamiltonian.grid();
    const std::size_t n = grid.size();
    h = Extended(2.0 * grid.half_width()) / Extended(static_cast<double>(n - 1));
    inv_h2 = 1 / (h * h);
    coupling.resize(n);
    const Extended lambda(hamiltonian.lambda());
    const auto& shape = hamiltonian.shape();
    for (std::size_t k = 0; k < n; ++k) {
      Extended v = (shape && has_extended_form(*shape)) ? potential_value(*shape, extended_point(grid, k))
                                                        : Extended(hamiltonian.potential()[k]);
      coupling[k] = lambda * v;
    }
  }

  void apply(const ExtendedVector& u, ExtendedVector& out) const {
    const std::size_t n = u.size();
    for (std::size_t k = 0; k < n; ++k) {
      Extended sum = 2 * u[k];
      if (k > 0) sum -= u[k - 1];
      if (k + 1 < n) sum -= u[k + 1];
      out[k] = sum * inv_h2 - coupling[k] * u[k];
    }
  }

  Extended inner(const ExtendedVector& a, const ExtendedVector& b) const {
    Extended sum = 0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] * b[k];
    return sum * h;
  }
};

ExtendedVector extended_start(const LanczosStart& start, const Grid& grid) {
  ExtendedVector q(grid.size());
  if (const auto* sampled = std::get_if<SampledFunction>(&start)) {
    if (!(sampled->grid() == grid)) throw std::invalid_argument("lanczos_run: start vector lives on another grid");
    double norm = lattice_norm(*sampled);
    if (std::abs(norm - 1.0) > 1e-8)
      throw std::invalid_argument("lanczos_run: start vector must have unit norm, got " + std::to_string(norm));
    for (std::size_t k = 0; k < grid.size(); ++k) q[k] = Extended((*sampled)[k]);
  } else {
    const Extended scale = mp::pow(2 / (4 * mp::atan(Extended(1))), Extended(0.25));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      Extended x = extended_point(grid, k);
      q[k] = scale * mp::exp(-x * x);
    }
  }
  return q;
}

SampledFunction to_sampled(const Grid& grid, const ExtendedVector& v) {
  SampledFunction out(grid);
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = static_cast<double>(v[k]);
  return out;
}

} // namespace

Hamiltonian::Hamiltonian(const PotentialSpec& shape, const Grid& grid, double lambda)
    : potential_(sample_potential(shape, grid)), lambda_(lambda), shape_(shape) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("coupling lambda must be positive");
}

Hamiltonian::Hamiltonian(SampledFunction potential, double lambda)
    : potential_(std::move(potential)), lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("coupling lambda must be positive");
  if (!potential_.all_finite()) throw std::invalid_argument("potential contains non-finite values");
}

std::pair<double, double> Hamiltonian::spectral_bounds() const {
  const double h = grid().spacing();
  const double diag = 2.0 / (h * h);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = grid().size();
  for (std::size_t k = 0; k < n; ++k) {
    double centre = diag - lambda_ * potential_[k];
    double radius = (k == 0 || k + 1 == n) ? diag / 2.0 : diag;
    lo = std::min(lo, centre - radius);
    hi = std::max(hi, centre + radius);
  }
  return {lo, hi};
}

SampledFunction hamiltonian_apply(const Hamiltonian& hamiltonian, const SampledFunction& u) {
  require_same_grid(hamiltonian.potential(), u);
  const double h = u.grid().spacing();
  const double inv_h2 = 1.0 / (h * h);
  const double lambda = hamiltonian.lambda();
  const auto& v = hamiltonian.potential();
  const std::size_t n = u.size();
  SampledFunction out(u.grid());
  for (std::size_t k = 0; k < n; ++k) {
    double left = k > 0 ? u[k - 1] : 0.0;
    double right = k + 1 < n ? u[k + 1] : 0.0;
    out[k] = (2.0 * u[k] - left - right) * inv_h2 - lambda * v[k] * u[k];
  }
  return out;
}

double lattice_inner_product(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  double sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * g[k];
  return sum * f.grid().spacing();
}

double lattice_norm(const SampledFunction& f) { return std::sqrt(lattice_inner_product(f, f)); }

SampledFunction start_vector(const Grid& grid) {
  ExtendedVector q = extended_start(GaussianStart{}, grid);
  Extended h = Extended(2.0 * grid.half_width()) / Extended(static_cast<double>(grid.size() - 1));
  Extended norm2 = 0;
  for (const auto& v : q) norm2 += v * v;
  Extended inv = 1 / mp::sqrt(norm2 * h);
  for (auto& v : q) v *= inv;
  return to_sampled(grid, q);
}

LanczosRun lanczos_run(const Hamiltonian& hamiltonian, const LanczosStart& start, std::size_t m) {
  if (m < 1) throw std::invalid_argument("lanczos_run: need at least one iteration");
  const Grid& grid = hamiltonian.grid();
  const std::size_t n = grid.size();
  const ExtendedOperator op(hamiltonian);

  ExtendedVector q = extended_start(start, grid);
  {
    Extended inv = 1 / mp::sqrt(op.inner(q, q));
    for (auto& v : q) v *= inv;
  }

  LanczosRun run;
  run.requested = m;
  std::vector<ExtendedVector> basis;
  basis.reserve(m);
  ExtendedVector r(n);
  Extended beta_prev = 0;

  for (std::size_t j = 0; j < m; ++j) {
    basis.push_back(q);
    run.basis.push_back(to_sampled(grid, q));
    const ExtendedVector& current = basis.back();

    op.apply(current, r);
    Extended alpha = op.inner(current, r);
    run.alphas.push_back(static_cast<double>(alpha));
    run.m = j + 1;
    for (std::size_t k = 0; k < n; ++k) {
      r[k] -= alpha * current[k];
      if (j > 0) r[k] -= beta_prev * basis[j - 1][k];
    }
    if (j + 1 == m) break;
    // Full reorthogonalization: two modified Gram-Schmidt passes.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Extended c = op.inner(b, r);
        for (std::size_t k = 0; k < n; ++k) r[k] -= c * b[k];
      }
    }

    Extended beta = mp::sqrt(op.inner(r, r));
    if (beta < Extended(1e-12)) {
      run.breakdown = true;
      break;
    }
    run.betas.push_back(static_cast<double>(beta));
    Extended inv = 1 / beta;
    for (std::size_t k = 0; k < n; ++k) q[k] = r[k] * inv;
    beta_prev = beta;
  }
  return run;
}

double delta_check(const RitzPair& pair, const Hamiltonian& hamiltonian) {
  SampledFunction applied = hamiltonian_apply(hamiltonian, pair.vector);
  double expectation = lattice_inner_product(applied, applied);
  return std::abs(pair.value * pair.value - expectation);
}

std::vector<RitzPair> ritz_pairs(const LanczosRun& run, const Hamiltonian& hamiltonian, std::size_t iteration) {
  if (iteration < 1 || iteration > run.m)
    throw std::invalid_argument("ritz_pairs: iteration " + std::to_string(iteration) + " outside 1.." +
                                std::to_string(run.m));
  std::span<const double> alphas(run.alphas.data(), iteration);
  std::span<const double> betas(run.betas.data(), iteration - 1);
  auto eigen = tridiagonal_eigen(alphas, betas);

  const Grid& grid = hamiltonian.grid();
  std::vector<RitzPair> pairs;
  pairs.reserve(eigen.size());
  for (const auto& [value, coeffs] : eigen) {
    SampledFunction psi(grid);
    for (std::size_t k = 0; k < iteration; ++k) {
      const auto& q = run.basis[k];
      for (std::size_t i = 0; i < grid.size(); ++i) psi[i] += coeffs[k] * q[i];
    }
    psi *= 1.0 / lattice_norm(psi);
    RitzPair pair{value, std::move(psi), 0.0, iteration};
    pair.delta = delta_check(pair, hamiltonian);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<RitzPair> ritz_pairs(const LanczosRun& run, const Hamiltonian& hamiltonian) {
  return ritz_pairs(run, hamiltonian, run.m);
}

std::vector<std::vector<RitzPair>> ritz_history(const LanczosRun& run, const Hamiltonian& hamiltonian) {
  std::vector<std::vector<RitzPair>> history;
  const std::size_t total = std::max(run.requested, run.m);
  history.reserve(total);
  for (std::size_t l = 1; l <= total; ++l) {
    if (l <= run.m) {
      history.push_back(ritz_pairs(run, hamiltonian, l));
    } else {
      auto repeated = history.back();
      for (auto& pair : repeated) pair.iteration = l;
      history.push_back(std::move(repeated));
    }
  }
  return history;
}

std::string to_string(PairLabel label) {
  switch (label) {
  case PairLabel::genuine:
    return "genuine";
  case PairLabel::spurious:
    return "spurious";
  case PairLabel::undecided:
    break;
  }
  return "undecided";
}

namespace {

// Delta sequence of the track ending at each pair of the final iteration.
std::vector<std::vector<double>> delta_tracks(std::span<const std::vector<RitzPair>> history, double gate) {
  struct Candidate {
    double distance;
    std::size_t from, to;
  };
  std::vector<std::vector<double>> tracks;
  std::vector<std::size_t> previous_owner; // track of each pair in the previous iteration
  for (std::size_t l = 0; l < history.size(); ++l) {
    const auto& pairs = history[l];
    std::vector<std::optional<std::size_t>> owner(pairs.size());
    if (l > 0) {
      const auto& previous = history[l - 1];
      std::vector<Candidate> candidates;
      for (std::size_t a = 0; a < previous.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          double d = std::abs(previous[a].value - pairs[b].value);
          if (d <= gate) candidates.push_back({d, a, b});
        }
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const Candidate& x, const Candidate& y) { return x.distance < y.distance; });
      std::vector<bool> from_used(previous.size(), false);
      for (const auto& c : candidates) {
        if (from_used[c.from] || owner[c.to]) continue;
        from_used[c.from] = true;
        owner[c.to] = previous_owner[c.from];
      }
    }
    previous_owner.assign(pairs.size(), 0);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (!owner[b]) {
        owner[b] = tracks.size();
        tracks.emplace_back();
      }
      tracks[*owner[b]].push_back(pairs[b].delta);
      previous_owner[b] = *owner[b];
    }
  }
  std::vector<std::vector<double>> out;
  for (std::size_t index : previous_owner) out.push_back(tracks[index]);
  return out;
}

PairLabel label_track(const std::vector<double>& deltas, const ClassifyOptions& options) {
  if (deltas.size() < options.window) return PairLabel::undecided;
  auto first = deltas.end() - static_cast<std::ptrdiff_t>(options.window);
  const double last = deltas.back();
  if (last < options.tau_zero && (last <= *first || last <= 1e-10)) return PairLabel::genuine;
  if (std::all_of(first, deltas.end(), [&](double d) { return d > options.tau_spur; })) return PairLabel::spurious;
  return PairLabel::undecided;
}

} // namespace

std::vector<PairLabel> classify_pairs(std::span<const std::vector<RitzPair>> history, const ClassifyOptions& options) {
  if (options.window < 2) throw std::invalid_argument("classify_pairs: window must be at least 2");
  if (history.size() < options.window)
    throw std::invalid_argument("classify_pairs: need at least " + std::to_string(options.window) +
                                " iterations of history, got " + std::to_string(history.size()));
  std::vector<PairLabel> labels;
  for (const auto& deltas : delta_tracks(history, options.gate)) labels.push_back(label_track(deltas, options));
  return labels;
}

void write_trace_csv(std::ostream& out, std::span<const std::vector<RitzPair>> history,
                     const ClassifyOptions& options) {
  out << "iteration,ritz_index,value,delta,label\n";
  std::ostringstream row;
  row << std::setprecision(17);
  for (std::size_t l = 0; l < history.size(); ++l) {
    std::vector<PairLabel> labels(history[l].size(), PairLabel::undecided);
    if (l + 1 >= options.window) labels = classify_pairs(history.subspan(0, l + 1), options);
    for (std::size_t b = 0; b < history[l].size(); ++b) {
      row.str({});
      row << l + 1 << ',' << b + 1 << ',' << history[l][b].value << ',' << history[l][b].delta << ','
          << to_string(labels[b]);
      out << row.str() << '\n';
    }
  }
}

} // namespace waxman
