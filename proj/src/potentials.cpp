#include "waxman/potentials.hpp"

#include <algorithm>

namespace waxman {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string potential_name(const PotentialSpec& spec) {
  return std::visit(overloaded{
                        [](const GaussianWell&) { return std::string("gaussian"); },
                        [](const PoschlTellerWell&) { return std::string("poschl_teller"); },
                        [](const SquareWell&) { return std::string("square_well"); },
                        [](const TabulatedPotential&) { return std::string("table"); },
                    },
                    spec);
}

SampledFunction sample_potential(const PotentialSpec& spec, const Grid& grid) {
  if (const auto* table = std::get_if<TabulatedPotential>(&spec)) {
    if (table->values.size() != grid.size())
      throw std::invalid_argument("potential table has " + std::to_string(table->values.size()) +
                                  " values but the grid has " + std::to_string(grid.size()) + " nodes");
    return SampledFunction(grid, table->values);
  }
  if (const auto* well = std::get_if<SquareWell>(&spec)) {
    if (!(well->a > 0.0)) throw std::invalid_argument("square well half-width must be positive");
    double tie = 1e-9 * grid.spacing();
    return SampledFunction::sample(grid, [a = well->a, tie](double x) {
      double gap = std::abs(x) - a;
      if (std::abs(gap) <= tie) return 0.5;
      return gap < 0.0 ? 1.0 : 0.0;
    });
  }
  return SampledFunction::sample(grid, [&spec](double x) { return potential_value(spec, x); });
}

std::vector<double> potential_breakpoints(const PotentialSpec& spec) {
  if (const auto* well = std::get_if<SquareWell>(&spec)) return {well->a};
  return {};
}

double potential_max(const PotentialSpec& spec) {
  if (const auto* table = std::get_if<TabulatedPotential>(&spec)) {
    if (table->values.empty()) return 0.0;
    return *std::max_element(table->values.begin(), table->values.end());
  }
  return 1.0;
}

} // namespace waxman
