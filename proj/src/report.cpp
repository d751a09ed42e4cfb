#include "waxman/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "waxman/errors.hpp"
#include "waxman/oracles.hpp"
#include "waxman/potentials.hpp"

namespace waxman {

namespace {

std::string fmt(double v, int digits = 7) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string fmt17(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

ReportRow failed_row(std::string name, std::string reference, const std::exception& e) {
  return {std::move(name), "error", std::move(reference), false, e.what()};
}

} // namespace

std::vector<std::string> ReproduceOptions::echo() const {
  return {
      "potential=gaussian",
      "half_width=" + fmt17(half_width),
      "n_points=" + std::to_string(n_points),
      "tol=" + fmt17(tol),
      "full_sweep=" + fmt17(full_lo) + ":" + fmt17(full_hi) + ":" + std::to_string(full_count),
      "odd_sweep_log=" + fmt17(odd_lo) + ":" + fmt17(odd_hi) + ":" + std::to_string(odd_count),
      "threshold_tail=" + fmt17(tail_start) + "*2^-k,k<" + std::to_string(tail_count) +
          ",fit_last=" + std::to_string(tail_fit_points),
      "shoot_step=" + fmt17(shoot_step),
      "lanczos_m=" + std::to_string(lanczos_m),
      "tau_zero=" + fmt17(classify.tau_zero),
      "tau_spur=" + fmt17(classify.tau_spur),
      "match_gate=" + fmt17(classify.gate),
  };
}

bool Reproduction::all_pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

const ReportRow* Reproduction::row(const std::string& name) const {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.name == name; });
  return it == rows.end() ? nullptr : &*it;
}

Reproduction run_reproduce_paper(const ReproduceOptions& options) {
  Reproduction rep;
  const Grid grid(options.half_width, options.n_points);
  const PotentialSpec shape = GaussianWell{};
  const SampledFunction potential = sample_potential(shape, grid);
  WaxmanConfig base;
  base.tol = options.tol;
  if (options.out_dir) std::filesystem::create_directories(*options.out_dir);

  // Full sector: sweep, invert at lambda = 1, residual check on every point.
  try {
    auto eps = linear_epsilons(options.full_lo, options.full_hi, options.full_count);
    rep.full_sweep = sweep_epsilon(eps, potential, Sector::full, base);
    if (options.out_dir) {
      std::ostringstream csv;
      write_curve_csv(csv, *rep.full_sweep);
      write_file(*options.out_dir / "full_sweep.csv", csv.str());
    }
  } catch (const std::exception& e) {
    rep.rows.push_back(failed_row("full_sector_sweep", "-", e));
  }
  if (rep.full_sweep) {
    try {
      rep.waxman_epsilon = invert_curve(rep.full_sweep->curve, 1.0);
      double energy = -*rep.waxman_epsilon;
      bool pass = std::abs(energy - published::waxman_ground_energy) <= tolerance::waxman_ground;
      rep.rows.push_back({"waxman_ground_energy", fmt(energy), fmt(published::waxman_ground_energy), pass,
                          "tolerance " + fmt(tolerance::waxman_ground)});
    } catch (const std::exception& e) {
      rep.rows.push_back(failed_row("waxman_ground_energy", fmt(published::waxman_ground_energy), e));
    }

    const double h = grid.spacing();
    double worst = 0.0;
    std::size_t checked = 0;
    for (const auto& record : rep.full_sweep->records) {
      if (!record.usable()) continue;
      worst = std::max(worst, schroedinger_residual(record.result->u, potential, record.result->lambda,
                                                    record.epsilon));
      ++checked;
    }
    bool pass = checked == rep.full_sweep->records.size() && worst <= tolerance::residual_h2 * h * h;
    rep.rows.push_back({"waxman_no_spurious_residual", fmt(worst / (h * h)) + " h^2",
                        "<= " + fmt(tolerance::residual_h2) + " h^2", pass,
                        std::to_string(checked) + "/" + std::to_string(rep.full_sweep->records.size()) +
                            " converged points checked"});
  }

  // Shooting oracle at lambda = 1, even parity.
  try {
    ShootingConfig cfg;
    cfg.lambda = 1.0;
    cfg.parity = Parity::even;
    cfg.half_width = options.half_width;
    cfg.step = options.shoot_step;
    const auto evaluator = evaluator_for(shape);
    rep.oracle_epsilon = shooting_eigenvalue(cfg, evaluator);
    ShootingConfig halved = cfg;
    halved.step = 0.5 * cfg.step;
    double refined = shooting_eigenvalue(halved, evaluator);
    double shift = std::abs(refined - *rep.oracle_epsilon);
    rep.rows.push_back({"oracle_step_halving", fmt(shift, 3), "< " + fmt(tolerance::oracle_step_halving),
                        shift < tolerance::oracle_step_halving, "shooting, step " + fmt(cfg.step) + " vs " +
                                                                    fmt(halved.step)});
    if (rep.waxman_epsilon) {
      double gap = std::abs(*rep.oracle_epsilon - *rep.waxman_epsilon);
      rep.rows.push_back({"oracle_ground_energy", fmt(-*rep.oracle_epsilon, 9), "waxman " + fmt(-*rep.waxman_epsilon, 9),
                          gap <= tolerance::oracle_vs_waxman,
                          "|oracle - waxman| = " + fmt(gap, 3) + "; published waxman " +
                              fmt(published::waxman_ground_energy) + ", lanczos " +
                              fmt(published::lanczos_ground_energy)});
    } else {
      rep.rows.push_back({"oracle_ground_energy", fmt(-*rep.oracle_epsilon, 9), "waxman: unavailable", false,
                          "no waxman value to compare"});
    }
  } catch (const std::exception& e) {
    rep.rows.push_back(failed_row("oracle_ground_energy", "waxman", e));
  }

  // Odd sector: no solution at lambda = 1.
  try {
    auto eps = log_epsilons(options.odd_lo, options.odd_hi, options.odd_count);
    rep.odd_sweep = sweep_epsilon(eps, potential, Sector::odd, base);
    if (options.out_dir) {
      std::ostringstream csv;
      write_curve_csv(csv, *rep.odd_sweep);
      write_file(*options.out_dir / "odd_sweep.csv", csv.str());
    }
    double lowest = rep.odd_sweep->curve.min_lambda();
    bool complete = rep.odd_sweep->curve.size() == rep.odd_sweep->records.size();
    rep.rows.push_back({"odd_sector_min_lambda", fmt(lowest), "> 1", complete && lowest > 1.0,
                        "epsilon in [" + fmt(options.odd_lo) + ", " + fmt(options.odd_hi) + "], " +
                            std::to_string(rep.odd_sweep->curve.size()) + " points"});
    try {
      double eps_at_one = invert_curve(rep.odd_sweep->curve, 1.0);
      rep.rows.push_back({"odd_sector_lambda1", "epsilon=" + fmt(eps_at_one), "no solution", false, ""});
    } catch (const NoSolutionError& e) {
      rep.rows.push_back({"odd_sector_lambda1", "no solution", "no solution", true, e.what()});
    }
  } catch (const std::exception& e) {
    rep.rows.push_back(failed_row("odd_sector_lambda1", "no solution", e));
  }

  // Odd-sector threshold coupling.
  try {
    auto tail = geometric_tail(options.tail_start, options.tail_count);
    rep.threshold = threshold_lambda(potential, Sector::odd, tail, base, options.tail_fit_points);
    double gap = std::abs(rep.threshold->lambda_star - published::odd_threshold);
    rep.rows.push_back({"excited_threshold", fmt(rep.threshold->lambda_star), fmt(published::odd_threshold),
                        gap <= tolerance::odd_threshold,
                        "|diff| = " + fmt(gap, 3) + ", tolerance " + fmt(tolerance::odd_threshold)});
  } catch (const std::exception& e) {
    rep.rows.push_back(failed_row("excited_threshold", fmt(published::odd_threshold), e));
  }

  // Lanczos with the Gaussian start vector.
  try {
    const Hamiltonian hamiltonian(shape, grid, 1.0);
    auto run = lanczos_run(hamiltonian, GaussianStart{}, options.lanczos_m);
    rep.lanczos_history = ritz_history(run, hamiltonian);
    if (options.out_dir) {
      std::ostringstream csv;
      write_trace_csv(csv, rep.lanczos_history, options.classify);
      write_file(*options.out_dir / "lanczos_trace.csv", csv.str());
    }
    const auto& pairs = rep.lanczos_history.back();
    rep.lanczos_labels = classify_pairs(rep.lanczos_history, options.classify);

    const RitzPair& ground = pairs.front();
    bool ground_pass = std::abs(ground.value - published::lanczos_ground_energy) <= tolerance::lanczos_ground;
    rep.rows.push_back({"lanczos_ground_energy", fmt(ground.value), fmt(published::lanczos_ground_energy),
                        ground_pass, "m=" + std::to_string(run.m) + ", tolerance " + fmt(tolerance::lanczos_ground)});

    auto positive = std::find_if(pairs.begin(), pairs.end(), [](const RitzPair& p) { return p.value > 0.0; });
    rep.rows.push_back({"lanczos_positive_ritz", positive == pairs.end() ? "none" : fmt(positive->value),
                        fmt(published::lanczos_spurious_energy), positive != pairs.end(),
                        "lowest positive Ritz value; position depends on the representation"});

    std::optional<std::size_t> spurious;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (pairs[b].value > 0.0 && rep.lanczos_labels[b] == PairLabel::spurious) {
        spurious = b;
        break;
      }
    bool ground_genuine = rep.lanczos_labels.front() == PairLabel::genuine;
    rep.rows.push_back({"lanczos_classification",
                        "ground " + to_string(rep.lanczos_labels.front()) + ", positive " +
                            (spurious ? to_string(PairLabel::spurious) + " (index " + std::to_string(*spurious + 1) + ")"
                                      : std::string("none spurious")),
                        "ground genuine, positive spurious", ground_genuine && spurious.has_value(), ""});
    if (spurious) {
      double ratio = pairs[*spurious].delta / ground.delta;
      rep.rows.push_back({"lanczos_delta_ratio", fmt(ratio, 4),
                          ">= " + fmt(tolerance::delta_ratio), ratio >= tolerance::delta_ratio,
                          "delta ground " + fmt(ground.delta, 6) + " (published " +
                              fmt(published::lanczos_ground_delta) + "), spurious " +
                              fmt(pairs[*spurious].delta, 6) + " (published " +
                              fmt(published::lanczos_spurious_delta) + ")"});
    } else {
      rep.rows.push_back({"lanczos_delta_ratio", "n/a", ">= " + fmt(tolerance::delta_ratio), false,
                          "no spurious positive pair"});
    }
  } catch (const std::exception& e) {
    rep.rows.push_back(failed_row("lanczos_ground_energy", fmt(published::lanczos_ground_energy), e));
  }
  return rep;
}

void print_report(std::ostream& out, const ReproduceOptions& options, const Reproduction& reproduction) {
  out << "# reproduce-paper: inverse Gaussian well, lambda = 1\n";
  for (const auto& line : options.echo()) out << "# " << line << '\n';
  std::size_t name_w = 4, computed_w = 8, ref_w = 9;
  for (const auto& r : reproduction.rows) {
    name_w = std::max(name_w, r.name.size());
    computed_w = std::max(computed_w, r.computed.size());
    ref_w = std::max(ref_w, r.reference.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("row", name_w) << "  " << pad("computed", computed_w) << "  " << pad("published", ref_w)
      << "  status  detail\n";
  for (const auto& r : reproduction.rows)
    out << pad(r.name, name_w) << "  " << pad(r.computed, computed_w) << "  " << pad(r.reference, ref_w) << "  "
        << (r.pass ? "PASS  " : "FAIL  ") << "  " << r.detail << '\n';
  out << (reproduction.all_pass() ? "all rows PASS\n" : "some rows FAIL\n");
}

} // namespace waxman
