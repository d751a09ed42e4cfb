#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "waxman/config.hpp"
#include "waxman/curve.hpp"
#include "waxman/errors.hpp"
#include "waxman/lanczos.hpp"
#include "waxman/oracles.hpp"
#include "waxman/report.hpp"

using namespace waxman;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNumerical = 2;

struct ConfigSource {
  std::string path;
  std::vector<std::string> overrides;
};

void add_config_options(CLI::App* cmd, ConfigSource& src) {
  cmd->add_option("--config", src.path, "key=value config file");
  cmd->add_option("--set", src.overrides, "override one key (key=value), repeatable");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Without a config file the defaults apply and --set fills in the rest.
ExperimentConfig load_config(const ConfigSource& src, SolverKind solver) {
  ExperimentConfig config;
  config.solver = solver;
  if (!src.path.empty()) config = parse_config(read_file(src.path));
  for (const auto& item : src.overrides) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got '" + item + "'");
    apply_setting(config, item.substr(0, eq), item.substr(eq + 1));
  }
  validate_config(config);
  return config;
}

void print_header(std::ostream& out, const std::string& command, const std::vector<std::string>& echo) {
  out << "# waxman " << command << '\n';
  for (const auto& line : echo) out << "# " << line << '\n';
}

// CSV goes to `output` when set, stdout otherwise; the header then moves to
// stderr so stdout stays parseable.
template <typename Writer>
void emit_csv(const ExperimentConfig& config, const std::string& command, Writer write) {
  if (config.output.empty()) {
    print_header(std::cerr, command, config.echo());
    write(std::cout);
    return;
  }
  print_header(std::cout, command, config.echo());
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + config.output);
  write(out);
  std::cout << "wrote " << config.output << '\n';
}

std::vector<double> require_epsilons(const ExperimentConfig& config) {
  if (config.epsilons.empty()) throw std::invalid_argument("no epsilon given (set epsilon=...)");
  return config.epsilons;
}

int cmd_solve_waxman(const ConfigSource& src) {
  auto config = load_config(src, SolverKind::waxman);
  auto epsilons = require_epsilons(config);
  print_header(std::cout, "solve-waxman", config.echo());
  auto potential = sample_potential(config.potential, config.grid());
  bool all_converged = true;
  std::cout << std::setprecision(10);
  std::cout << "epsilon lambda iterations residual converged\n";
  for (double eps : epsilons) {
    auto cfg = config.waxman_config();
    cfg.epsilon = eps;
    auto result = waxman_fixed_point(cfg, potential);
    all_converged = all_converged && result.converged;
    std::cout << eps << ' ' << result.lambda << ' ' << result.iterations << ' ' << result.residual << ' '
              << (result.converged ? "yes" : "no") << '\n';
  }
  if (!all_converged) {
    std::cerr << "error: fixed point did not converge within max_iter=" << config.max_iter << '\n';
    return kNumerical;
  }
  return kOk;
}

int cmd_sweep(const ConfigSource& src) {
  auto config = load_config(src, SolverKind::waxman);
  auto epsilons = require_epsilons(config);
  auto potential = sample_potential(config.potential, config.grid());
  auto sweep = sweep_epsilon(epsilons, potential, config.sector, config.waxman_config());
  emit_csv(config, "sweep", [&](std::ostream& out) { write_curve_csv(out, sweep); });
  return kOk;
}

// Reads back a sweep CSV; only converged rows become curve samples.
LambdaEpsilonCurve read_curve_csv(const std::string& path, Sector sector) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line.rfind("epsilon,lambda", 0) != 0)
    throw std::invalid_argument(path + ": not a sweep CSV");
  std::vector<CurveSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    if (cells.size() != 5) throw std::invalid_argument(path + ": malformed row '" + line + "'");
    if (cells[4] != "1") continue;
    samples.push_back({std::stod(cells[0]), std::stod(cells[1])});
  }
  if (samples.empty()) throw NumericalError(path + ": no converged points");
  return LambdaEpsilonCurve(std::move(samples), sector);
}

int cmd_invert(const ConfigSource& src, double lambda, const std::string& curve_path) {
  auto config = load_config(src, SolverKind::waxman);
  print_header(std::cout, "invert", config.echo());
  std::optional<LambdaEpsilonCurve> curve;
  if (!curve_path.empty()) {
    std::cout << "# curve=" << curve_path << '\n';
    curve = read_curve_csv(curve_path, config.sector);
  } else {
    auto potential = sample_potential(config.potential, config.grid());
    curve = sweep_epsilon(require_epsilons(config), potential, config.sector, config.waxman_config()).curve;
  }
  double eps = invert_curve(*curve, lambda);
  std::cout << std::setprecision(10) << "lambda=" << lambda << " epsilon=" << eps << " energy=" << -eps << '\n';
  return kOk;
}

int cmd_threshold(const ConfigSource& src, double tail_start, std::size_t tail_count, std::size_t fit_points) {
  auto config = load_config(src, SolverKind::waxman);
  if (config.sector != Sector::odd) apply_setting(config, "sector", "odd");
  print_header(std::cout, "threshold", config.echo());
  std::cout << "# tail_start=" << tail_start << " tail_count=" << tail_count << " fit_points=" << fit_points << '\n';
  auto potential = sample_potential(config.potential, config.grid());
  auto tail = geometric_tail(tail_start, tail_count);
  auto fit = threshold_lambda(potential, Sector::odd, tail, config.waxman_config(), fit_points);
  std::cout << std::setprecision(10);
  for (const auto& s : fit.tail) std::cout << "epsilon=" << s.epsilon << " lambda=" << s.lambda << '\n';
  std::cout << "lambda_star=" << fit.lambda_star << " slope=" << fit.slope << '\n';
  return kOk;
}

int cmd_solve_lanczos(const ConfigSource& src) {
  auto config = load_config(src, SolverKind::lanczos);
  const Hamiltonian hamiltonian(config.potential, config.grid(), config.lambda);
  auto run = lanczos_run(hamiltonian, GaussianStart{}, config.m);
  auto history = ritz_history(run, hamiltonian);
  emit_csv(config, "solve-lanczos",
           [&](std::ostream& out) { write_trace_csv(out, history, config.classify_options()); });
  if (!config.output.empty()) {
    auto labels = history.size() >= ClassifyOptions{}.window
                      ? classify_pairs(history, config.classify_options())
                      : std::vector<PairLabel>(history.back().size(), PairLabel::undecided);
    std::cout << std::setprecision(8) << "index value delta label\n";
    for (std::size_t b = 0; b < history.back().size(); ++b)
      std::cout << b + 1 << ' ' << history.back()[b].value << ' ' << history.back()[b].delta << ' '
                << to_string(labels[b]) << '\n';
    if (run.breakdown) std::cout << "# breakdown after " << run.m << " iterations\n";
  }
  return kOk;
}

int cmd_oracle(const std::string& potential_name, double lambda, const std::string& parity, double a, double step,
               bool analytic) {
  ExperimentConfig config;
  apply_setting(config, "potential", potential_name);
  if (potential_name == "square_well") {
    if (!(a > 0.0)) throw std::invalid_argument("--a must be positive");
    config.potential = SquareWell{a};
  }
  const Parity p = parse_parity(parity);
  std::cout << "# waxman oracle\n# potential=" << potential_name << "\n# lambda=" << lambda << "\n# parity="
            << to_string(p) << '\n';
  if (const auto* well = std::get_if<SquareWell>(&config.potential)) std::cout << "# a=" << well->a << '\n';
  std::cout << std::setprecision(12);
  if (analytic) {
    std::size_t index = p == Parity::even ? 0 : 1;
    std::cout << "# method=analytic\n" << analytic_level(config.potential, lambda, index) << '\n';
    return kOk;
  }
  ShootingConfig cfg;
  cfg.lambda = lambda;
  cfg.parity = p;
  cfg.step = step;
  cfg.validate();
  std::cout << "# method=shooting\n# step=" << step << '\n';
  std::cout << shooting_eigenvalue(cfg, evaluator_for(config.potential)) << '\n';
  return kOk;
}

int cmd_reproduce(const std::string& out_dir) {
  ReproduceOptions options;
  if (!out_dir.empty()) options.out_dir = out_dir;
  auto reproduction = run_reproduce_paper(options);
  print_report(std::cout, options, reproduction);
  return reproduction.all_pass() ? kOk : kNumerical;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's-function fixed point and Lanczos bound-state solvers"};
  app.require_subcommand(1);

  ConfigSource src;
  auto* solve = app.add_subcommand("solve-waxman", "fixed-point iteration at each configured epsilon");
  add_config_options(solve, src);
  auto* sweep = app.add_subcommand("sweep", "lambda(epsilon) sweep as CSV");
  add_config_options(sweep, src);

  auto* invert = app.add_subcommand("invert", "epsilon at a given lambda from a sweep");
  add_config_options(invert, src);
  double invert_lambda = 1.0;
  std::string curve_path;
  invert->add_option("--lambda", invert_lambda, "target coupling")->required();
  invert->add_option("--curve", curve_path, "sweep CSV to invert instead of running a sweep");

  auto* threshold = app.add_subcommand("threshold", "odd-sector threshold coupling");
  add_config_options(threshold, src);
  double tail_start = 1e-3;
  std::size_t tail_count = 11, fit_points = 4;
  threshold->add_option("--tail-start", tail_start, "largest tail epsilon")->capture_default_str();
  threshold->add_option("--tail-count", tail_count, "tail length (halving)")->capture_default_str();
  threshold->add_option("--fit-points", fit_points, "points in the sqrt(epsilon) fit")->capture_default_str();

  auto* lanczos = app.add_subcommand("solve-lanczos", "Lanczos run with Delta trace CSV");
  add_config_options(lanczos, src);

  auto* oracle = app.add_subcommand("oracle", "shooting or analytic reference level");
  std::string oracle_potential = "gaussian", oracle_parity = "even";
  double oracle_lambda = 1.0, oracle_a = 1.0, oracle_step = 1e-3;
  bool oracle_analytic = false;
  oracle->add_option("--potential", oracle_potential)->capture_default_str();
  oracle->add_option("--lambda", oracle_lambda)->capture_default_str();
  oracle->add_option("--parity", oracle_parity)->capture_default_str();
  oracle->add_option("--a", oracle_a, "square-well half-width")->capture_default_str();
  oracle->add_option("--step", oracle_step, "RK4 step")->capture_default_str();
  oracle->add_flag("--analytic", oracle_analytic, "closed form instead of shooting");

  auto* reproduce = app.add_subcommand("reproduce-paper", "inverse Gaussian well comparison table");
  std::string out_dir;
  reproduce->add_option("--out-dir", out_dir, "directory for CSV artifacts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve_waxman(src);
    if (*sweep) return cmd_sweep(src);
    if (*invert) return cmd_invert(src, invert_lambda, curve_path);
    if (*threshold) return cmd_threshold(src, tail_start, tail_count, fit_points);
    if (*lanczos) return cmd_solve_lanczos(src);
    if (*oracle)
      return cmd_oracle(oracle_potential, oracle_lambda, oracle_parity, oracle_a, oracle_step, oracle_analytic);
    if (*reproduce) return cmd_reproduce(out_dir);
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
