#include "doctest.h"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "cotwell/grid.hpp"
#include "cotwell/report.hpp"

using namespace cotwell;

namespace {

SolverConfig small_config() {
  SolverConfig c;
  c.n_grid = 1000;
  return c;
}

}  // namespace

TEST_CASE("comparison table") {
  const auto config = small_config();
  const auto table = build_table(0, 3, config);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.errors.empty());
  CHECK_FALSE(table.extrapolated);
  CHECK(table.units == "hbar^2 k^2 / m");
  for (const auto& row : table.rows) {
    CHECK(row.wkb);
    CHECK(row.spt);
    CHECK(row.numerov);
  }
  CHECK(*table.rows[0].numerov == doctest::Approx(0.5).epsilon(1e-7));

  std::ostringstream a, b;
  write_table_csv(a, table);
  write_table_csv(b, build_table(0, 3, config));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n,wkb,spt,numerov\n0,0.4579,0.4886,0.5000\n", 0) == 0);

  std::ostringstream full;
  write_table_csv(full, table, -1);
  CHECK(full.str().find("0.45787") != std::string::npos);

  const auto doc = to_json(table, config);
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["config"]["n_grid"] == 1000);
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
  CHECK_THROWS_AS(build_table(3, 3, config), std::invalid_argument);
}

TEST_CASE("failed cells are recorded, not fatal") {
  auto config = small_config();
  config.model.v0 = 2.0;
  const auto table = build_table(0, 2, config);
  CHECK_FALSE(table.rows[0].spt);
  CHECK(table.rows[0].wkb);
  CHECK(table.rows[0].numerov);
  REQUIRE(table.errors.size() == 2);
  CHECK(table.errors[0].column == "spt");
  std::ostringstream out;
  write_table_csv(out, table);
  CHECK(out.str().find("\n0,") != std::string::npos);
  CHECK(to_json(table, config)["rows"][0]["spt"].is_null());

  config = small_config();
  config.numerov.energy_max = 1.0;
  const auto partial = build_table(0, 4, config);
  CHECK_FALSE(partial.rows[0].numerov);
  CHECK(partial.rows[3].wkb);
  CHECK(build_table(8, 9, small_config()).extrapolated);
}

TEST_CASE("panels") {
  const auto specs = standard_panels();
  REQUIRE(specs.size() == 4);
  CHECK(specs[0].label == "a");
  CHECK(specs[3].level == 7);

  const auto config = small_config();
  const auto panel = figure_panel(specs[0], config);
  REQUIRE(panel.density.size() == 3);
  CHECK(panel.errors.empty());
  CHECK(panel.x.size() == 1001);
  double worst = 0.0;
  for (std::size_t k = 0; k < panel.x.size(); ++k)
    worst = std::max(worst, std::fabs(panel.density[0][k] - panel.density[2][k]));
  CHECK(worst < 1e-6);

  std::ostringstream out;
  write_panel_csv(out, panel);
  CHECK(out.str().rfind("x,analytic,spt,numerov\n", 0) == 0);
  CHECK(to_json(panel)["density"]["spt"].size() == 1001);

  const auto bad = figure_panel({"x", 1, {Method::analytic, Method::numerov}}, config);
  CHECK(bad.errors.size() == 1);
  CHECK(bad.density[0].empty());
  std::ostringstream out2;
  write_panel_csv(out2, bad);
  CHECK(out2.str().find("\n-3.14159265359,,0\n") != std::string::npos);
}

TEST_CASE("solve_state") {
  const auto config = small_config();
  CHECK(solve_state(Method::spt, 9, config).level == 9);
  CHECK(solve_state(Method::wkb, 2, config).node_count == 2);
  CHECK_THROWS_AS(solve_state(Method::analytic, 1, config), SolverError);
  CHECK_THROWS_AS(solve_state(Method::numerov, -1, config), std::invalid_argument);
}

TEST_CASE("l2 distance") {
  const Grid g(100);
  std::vector<double> a(101, 1.0), b(101, 0.0);
  CHECK(l2_distance(a, b, g.step()) == doctest::Approx(std::sqrt(2 * std::numbers::pi)));
  CHECK(l2_distance(a, a, g.step()) == 0.0);
  CHECK_THROWS_AS(l2_distance(a, std::vector<double>(5), 0.1), std::invalid_argument);
}

TEST_CASE("convergence study") {
  const auto config = small_config();
  const auto rows = convergence_study(0, {250, 500, 1000}, config);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].observed_order);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(*rows[i].observed_order == doctest::Approx(4.0).epsilon(0.12));
  const auto excited = convergence_study(2, {250, 500, 1000}, config);
  CHECK(excited.back().error == 0.0);
  CHECK(*excited[1].observed_order > 3.0);
  std::ostringstream out;
  write_convergence_csv(out, rows);
  CHECK(out.str().rfind("n_grid,h,energy,error,order\n250,", 0) == 0);
  CHECK(to_json(rows, 0)["rows"][0]["order"].is_null());
  CHECK_THROWS_AS(convergence_study(0, {500}, config), std::invalid_argument);
}

TEST_CASE("method gaps across the table") {
  SolverConfig config;
  config.n_grid = 2000;
  const auto table = build_table(0, 8, config);
  std::vector<double> spt_gap, wkb_gap, wkb_rel;
  for (const auto& row : table.rows) {
    spt_gap.push_back(std::fabs(*row.spt - *row.numerov));
    wkb_gap.push_back(std::fabs(*row.wkb - *row.numerov));
    wkb_rel.push_back(wkb_gap.back() / *row.numerov);
  }
  // SPT drifts away at high n, WKB closes in.
  for (int n = 5; n < 8; ++n) CHECK(spt_gap[n] > wkb_gap[n]);
  for (int n = 4; n < 8; ++n) CHECK(spt_gap[n] > spt_gap[n - 1]);
  for (int n = 3; n < 8; ++n) CHECK(wkb_rel[n] < wkb_rel[n - 1]);
  CHECK(wkb_rel[7] < wkb_rel[0]);
  for (int n = 0; n < 8; ++n) CHECK(*table.rows[n].wkb < *table.rows[n].numerov);
}
