#include "cotwell/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "cotwell/analytic.hpp"
#include "cotwell/grid.hpp"
#include "cotwell/quadrature.hpp"
#include "cotwell/wkb.hpp"

namespace cotwell {
namespace {

constexpr int kPublishedLevels = 8;

bool is_reference_well(const PotentialModel& model) {
  return model.shape == WellShape::cotangent && model.v0 == 1.0;
}

void require_reference_well(const PotentialModel& model, std::string_view method) {
  if (!is_reference_well(model))
    throw SolverError(std::string(method) + " is only defined for the cotangent well with v0 = 1");
}

std::string format_number(double value, int decimals) {
  char buf[64];
  if (decimals >= 0)
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  else
    std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const std::vector<CellError>& errors) {
  auto out = nlohmann::json::array();
  for (const auto& e : errors) out.push_back({{"n", e.n}, {"column", e.column}, {"message", e.message}});
  return out;
}

}  // namespace

nlohmann::json to_json(const SolverConfig& config) {
  return {
      {"v0", config.model.v0},
      {"shape", config.model.shape == WellShape::cotangent ? "cotangent" : "flat"},
      {"series_switch_radius", config.model.series_switch_radius},
      {"series_order", config.model.series_order},
      {"wall_cap", config.model.wall_cap},
      {"n_grid", config.n_grid},
      {"seed", config.numerov.seed},
      {"scan_step", config.numerov.scan_step},
      {"bisect_tol", config.numerov.tol},
      {"energy_max", config.numerov.energy_max},
      {"wall_scheme", config.numerov.wall == WallScheme::series ? "series" : "last-interior"},
      {"wkb_tol", config.wkb_tol},
      {"spt_xi6_second_order", config.spt.include_xi6_second_order},
  };
}

ComparisonTable build_table(int first, int last, const SolverConfig& config) {
  if (first < 0 || last <= first) throw std::invalid_argument("build_table: empty level range");
  const Potential potential(config.model);
  ComparisonTable table;
  table.extrapolated = last > kPublishedLevels;
  for (int n = first; n < last; ++n) {
    TableRow row;
    row.n = n;
    table.rows.push_back(row);
  }

  auto row = [&](int n) -> TableRow& { return table.rows[static_cast<std::size_t>(n - first)]; };

  for (int n = first; n < last; ++n) {
    try {
      row(n).wkb = quantize(potential, n, config.wkb_tol).energy;
    } catch (const std::exception& e) {
      table.errors.push_back({n, "wkb", e.what()});
    }
    try {
      require_reference_well(config.model, "spt");
      row(n).spt = total_energy(n, config.spt).total;
    } catch (const std::exception& e) {
      table.errors.push_back({n, "spt", e.what()});
    }
  }

  try {
    const auto spectrum = solve_spectrum(potential, Grid(config.n_grid), last, config.numerov);
    for (int n = first; n < last; ++n) row(n).numerov = spectrum[static_cast<std::size_t>(n)].energy;
  } catch (const std::exception& e) {
    for (int n = first; n < last; ++n) table.errors.push_back({n, "numerov", e.what()});
  }

  std::stable_sort(table.errors.begin(), table.errors.end(),
                   [](const CellError& a, const CellError& b) { return a.n < b.n; });
  return table;
}

void write_table_csv(std::ostream& out, const ComparisonTable& table, int decimals) {
  out << "n,wkb,spt,numerov\n";
  for (const auto& row : table.rows) {
    out << row.n;
    for (const auto& cell : {row.wkb, row.spt, row.numerov}) {
      out << ',';
      if (cell) out << format_number(*cell, decimals);
    }
    out << '\n';
  }
}

nlohmann::json to_json(const ComparisonTable& table, const SolverConfig& config) {
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"n", row.n},
                    {"wkb", optional_json(row.wkb)},
                    {"spt", optional_json(row.spt)},
                    {"numerov", optional_json(row.numerov)}});
  return {{"units", table.units},
          {"rows", rows},
          {"errors", to_json(table.errors)},
          {"extrapolated", table.extrapolated},
          {"config", to_json(config)}};
}

std::vector<PanelSpec> standard_panels() {
  return {
      {"a", 0, {Method::analytic, Method::spt, Method::numerov}},
      {"b", 1, {Method::spt, Method::numerov}},
      {"c", 6, {Method::wkb, Method::numerov}},
      {"d", 7, {Method::wkb, Method::numerov}},
  };
}

EigenSolution solve_state(Method method, int level, const SolverConfig& config) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  const Potential potential(config.model);
  const Grid grid(config.n_grid);
  switch (method) {
    case Method::numerov: {
      auto spectrum = solve_spectrum(potential, grid, level + 1, config.numerov);
      return std::move(spectrum.back());
    }
    case Method::wkb:
      return wkb_wavefunction(potential, quantize(potential, level, config.wkb_tol), grid);
    case Method::spt:
      require_reference_well(config.model, "spt");
      return perturbed_state(level, grid, config.spt);
    case Method::analytic:
      require_reference_well(config.model, "analytic");
      if (level != 0) throw SolverError("analytic: only the ground state has a closed form");
      return analytic_solution(grid);
  }
  throw std::invalid_argument("unknown method");
}

Panel figure_panel(const PanelSpec& spec, const SolverConfig& config) {
  Panel panel;
  panel.label = spec.label;
  panel.level = spec.level;
  panel.methods = spec.methods;
  panel.x = Grid(config.n_grid).nodes();
  for (Method m : spec.methods) {
    std::vector<double> density;
    try {
      const auto sol = solve_state(m, spec.level, config);
      density.reserve(sol.wavefunction.size());
      for (double psi : sol.wavefunction) density.push_back(psi * psi);
    } catch (const std::exception& e) {
      panel.errors.push_back({spec.level, std::string(to_string(m)), e.what()});
    }
    panel.density.push_back(std::move(density));
  }
  return panel;
}

std::vector<Panel> figure_panels(const std::vector<PanelSpec>& specs, const SolverConfig& config) {
  std::vector<Panel> out;
  for (const auto& spec : specs) out.push_back(figure_panel(spec, config));
  return out;
}

void write_panel_csv(std::ostream& out, const Panel& panel) {
  out << 'x';
  for (Method m : panel.methods) out << ',' << to_string(m);
  out << '\n';
  char buf[48];
  for (std::size_t k = 0; k < panel.x.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.12g", panel.x[k]);
    out << buf;
    for (const auto& column : panel.density) {
      out << ',';
      if (!column.empty()) {
        std::snprintf(buf, sizeof buf, "%.12g", column[k]);
        out << buf;
      }
    }
    out << '\n';
  }
}

nlohmann::json to_json(const Panel& panel) {
  nlohmann::json density = nlohmann::json::object();
  for (std::size_t m = 0; m < panel.methods.size(); ++m) {
    const auto name = std::string(to_string(panel.methods[m]));
    density[name] = panel.density[m].empty() ? nlohmann::json(nullptr) : nlohmann::json(panel.density[m]);
  }
  return {{"label", panel.label},
          {"level", panel.level},
          {"x", panel.x},
          {"density", density},
          {"errors", to_json(panel.errors)}};
}

double l2_distance(const std::vector<double>& a, const std::vector<double>& b, double h) {
  if (a.size() != b.size()) throw std::invalid_argument("l2_distance: size mismatch");
  std::vector<double> sq(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) sq[k] = (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(simpson(sq, h));
}

std::vector<ConvergenceRow> convergence_study(int level, std::vector<int> grid_sizes,
                                              const SolverConfig& config) {
  if (level < 0) throw std::invalid_argument("convergence: level must be >= 0");
  if (grid_sizes.size() < 2) throw std::invalid_argument("convergence: need at least 2 grids");
  const Potential potential(config.model);

  std::vector<ConvergenceRow> rows;
  for (int n : grid_sizes) {
    const Shooter shooter(potential, Grid(n), config.numerov.wall, config.numerov.seed);
    const auto brackets = scan_brackets(shooter, level + 1, config.numerov);
    const auto [lo, hi] = brackets.back();
    ConvergenceRow row;
    row.n_grid = n;
    row.h = shooter.grid().step();
    row.energy = shooter.refine(lo, hi, 0.0L);
    rows.push_back(row);
  }

  long double reference;
  if (level == 0 && is_reference_well(config.model)) {
    reference = 0.5L;
  } else {
    const auto finest = std::max_element(rows.begin(), rows.end(),
                                         [](const auto& a, const auto& b) { return a.n_grid < b.n_grid; });
    reference = finest->energy;
  }
  for (auto& row : rows) row.error = static_cast<double>(std::fabs(row.energy - reference));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& prev = rows[i - 1];
    if (prev.error > 0.0 && rows[i].error > 0.0 && prev.h != rows[i].h)
      rows[i].observed_order = std::log(prev.error / rows[i].error) / std::log(prev.h / rows[i].h);
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "n_grid,h,energy,error,order\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.18Lg,%.6e,", row.n_grid, row.h, row.energy, row.error);
    out << buf;
    if (row.observed_order) {
      std::snprintf(buf, sizeof buf, "%.4f", *row.observed_order);
      out << buf;
    }
    out << '\n';
  }
}

nlohmann::json to_json(const std::vector<ConvergenceRow>& rows, int level) {
  auto arr = nlohmann::json::array();
  for (const auto& row : rows)
    arr.push_back({{"n_grid", row.n_grid},
                   {"h", row.h},
                   {"energy", static_cast<double>(row.energy)},
                   {"error", row.error},
                   {"order", row.observed_order ? nlohmann::json(*row.observed_order) : nlohmann::json(nullptr)}});
  return {{"level", level}, {"rows", arr}};
}

}  // namespace cotwell
