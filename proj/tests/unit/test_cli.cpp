#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("waxman_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  std::string cmd = std::string(WAXMAN_BIN) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

} // namespace

TEST_CASE("oracle prints the poschl-teller level") {
  auto r = run("oracle --potential poschl_teller --lambda 2 --parity even");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') last = line;
  CHECK(std::abs(std::stod(last) - 1.0) <= 1e-6);
}

TEST_CASE("sweep writes a deterministic CSV") {
  auto cfg = write("g.cfg", "potential=gaussian\nsolver=waxman\nepsilon=0.1:1.0:10\nn_points=1201\noutput=" +
                                (scratch() / "sweep1.csv").string() + "\n");
  auto first = run("sweep --config " + cfg.string());
  REQUIRE(first.code == 0);
  CHECK(first.out.find("# n_points=1201") != std::string::npos);
  CHECK(first.out.find("# tol=1e-10") != std::string::npos);
  auto csv1 = slurp(scratch() / "sweep1.csv");
  CHECK(csv1.rfind("epsilon,lambda,iterations,residual,converged\n", 0) == 0);

  auto second = run("sweep --config " + cfg.string() + " --set output=" + (scratch() / "sweep2.csv").string());
  REQUIRE(second.code == 0);
  CHECK(csv1 == slurp(scratch() / "sweep2.csv"));
}

TEST_CASE("inverting the odd-sector curve has no solution") {
  auto cfg = write("odd.cfg", "potential=gaussian\nsolver=waxman\nsector=odd\nepsilon=0.01:1.0:8\n"
                              "n_points=1201\noutput=" + (scratch() / "odd.csv").string() + "\n");
  REQUIRE(run("sweep --config " + cfg.string()).code == 0);
  auto r = run("invert --lambda 1.0 --set sector=odd --curve " + (scratch() / "odd.csv").string());
  CHECK(r.code == 2);
  CHECK(r.err.find("no bound state at lambda=1") != std::string::npos);

  auto ok = run("invert --lambda 1.0 --set epsilon=0.1:1:10 --set n_points=1201");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("epsilon=0.47") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run("").code == 1);
  CHECK(run("no-such-command").code == 1);
  auto bad = write("bad.cfg", "potential=unknown_shape\nsolver=waxman\n");
  auto r = run("sweep --config " + bad.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("potential") != std::string::npos);
  CHECK(run("sweep --config " + (scratch() / "missing.cfg").string()).code == 1);
  CHECK(run("oracle --parity sideways").code == 1);
}

TEST_CASE("numerical failures exit with 2") {
  CHECK(run("oracle --potential gaussian --lambda 1 --parity odd").code == 2);
  CHECK(run("solve-waxman --set epsilon=0.5 --set max_iter=2").code == 2);
}

TEST_CASE("lanczos trace CSV and threshold") {
  auto trace = scratch() / "trace.csv";
  auto r = run("solve-lanczos --set m=6 --set n_points=601 --set output=" + trace.string());
  REQUIRE(r.code == 0);
  CHECK(slurp(trace).rfind("iteration,ritz_index,value,delta,label\n", 0) == 0);
  CHECK(r.out.find("# m=6") != std::string::npos);

  auto t = run("threshold --set potential=square_well --set n_points=1201");
  CHECK(t.code == 0);
  CHECK(t.out.find("lambda_star=2.4") != std::string::npos);
}
