#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cotwell/eigen_solution.hpp"
#include "cotwell/numerov.hpp"
#include "cotwell/potential.hpp"
#include "cotwell/spt.hpp"

namespace cotwell {

/// Shared solver settings for every report.
struct SolverConfig {
  PotentialModel model;
  int n_grid = 8000;
  NumerovOptions numerov;
  double wkb_tol = 1e-8;
  SptOptions spt;
};

nlohmann::json to_json(const SolverConfig& config);

struct TableRow {
  int n = 0;
  std::optional<double> wkb;
  std::optional<double> spt;
  std::optional<double> numerov;
};

struct CellError {
  int n = 0;
  std::string column;
  std::string message;
};

/// Energies per level from each method; failed cells stay empty and are
/// listed in `errors`.
struct ComparisonTable {
  std::string units = "hbar^2 k^2 / m";
  std::vector<TableRow> rows;
  std::vector<CellError> errors;
  /// Levels beyond the eight published rows were requested.
  bool extrapolated = false;
};

/// Rows for levels first..last-1.
ComparisonTable build_table(int first, int last, const SolverConfig& config);

/// `n,wkb,spt,numerov` with `decimals` fixed digits, or %.17g when decimals < 0.
/// Failed cells are written empty.
void write_table_csv(std::ostream& out, const ComparisonTable& table, int decimals = 4);

nlohmann::json to_json(const ComparisonTable& table, const SolverConfig& config);

/// |psi|^2 of one level from several methods on a common grid.
struct Panel {
  std::string label;
  int level = 0;
  std::vector<Method> methods;
  std::vector<double> x;
  /// density[m][k] = |psi_m(x_k)|^2
  std::vector<std::vector<double>> density;
  std::vector<CellError> errors;
};

struct PanelSpec {
  std::string label;
  int level = 0;
  std::vector<Method> methods;
};

/// (a) level 0 {analytic, spt, numerov}, (b) level 1 {spt, numerov},
/// (c) level 6 {wkb, numerov}, (d) level 7 {wkb, numerov}.
std::vector<PanelSpec> standard_panels();

/// One eigenfunction for `method` and `level`; throws SolverError or
/// std::invalid_argument when the method cannot produce it.
EigenSolution solve_state(Method method, int level, const SolverConfig& config);

Panel figure_panel(const PanelSpec& spec, const SolverConfig& config);
std::vector<Panel> figure_panels(const std::vector<PanelSpec>& specs, const SolverConfig& config);

/// `x,<method>,...` with 12 significant digits.
void write_panel_csv(std::ostream& out, const Panel& panel);
nlohmann::json to_json(const Panel& panel);

/// sqrt(integral (a - b)^2 dx) by Simpson on the panel grid.
double l2_distance(const std::vector<double>& a, const std::vector<double>& b, double h);

struct ConvergenceRow {
  int n_grid = 0;
  double h = 0.0;
  long double energy = 0.0L;
  /// Against 0.5 for level 0 of the v0 = 1 well, otherwise against the finest grid.
  double error = 0.0;
  /// log2(err_prev / err) scaled by log(h_prev / h); absent on the first row.
  std::optional<double> observed_order;
};

/// Level `level` re-solved on each grid. Needs at least two grid sizes.
std::vector<ConvergenceRow> convergence_study(int level, std::vector<int> grid_sizes,
                                              const SolverConfig& config);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
nlohmann::json to_json(const std::vector<ConvergenceRow>& rows, int level);

}  // namespace cotwell
