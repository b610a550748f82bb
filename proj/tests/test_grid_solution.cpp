#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cotwell/eigen_solution.hpp"
#include "cotwell/grid.hpp"

using namespace cotwell;

namespace {

std::vector<double> sample(const Grid& g, double (*f)(double)) {
  std::vector<double> out;
  for (double x : g.nodes()) out.push_back(f(x));
  return out;
}

}  // namespace

TEST_CASE("grid layout") {
  const Grid g(1000);
  CHECK(g.size() == 1001);
  CHECK(g.node(0) == -std::numbers::pi);
  CHECK(g.node(1000) == std::numbers::pi);
  CHECK(g.node(g.center()) == 0.0);
  CHECK(g.step() == doctest::Approx(2 * std::numbers::pi / 1000));
  for (std::size_t k = 0; k <= 1000; ++k) CHECK(g.node(k) == -g.node(1000 - k));
  CHECK_THROWS_AS(Grid(7), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0), std::invalid_argument);
}

TEST_CASE("normalize") {
  const Grid g(400);
  auto f = sample(g, [](double x) { return -3.0 * std::cos(x / 2.0); });
  const auto psi = normalize(f, g);
  CHECK(norm_squared(psi, g) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(psi[1] > 0.0);
  // exact: int cos^2(x/2) over [-pi, pi] = pi
  CHECK(psi[g.center()] == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-8));
  CHECK_THROWS_AS(normalize(std::vector<double>(401, 0.0), g), std::invalid_argument);
  CHECK_THROWS_AS(normalize(std::vector<double>(10, 1.0), g), std::invalid_argument);
}

TEST_CASE("nodes and parity") {
  const Grid g(600);
  const auto s3 = sample(g, [](double x) { return std::sin(3.0 * x); });
  CHECK(count_nodes(s3) == 5);
  CHECK(detect_parity(s3) == Parity::odd);
  const auto c = sample(g, [](double x) { return std::cos(2.5 * x); });
  CHECK(count_nodes(c) == 4);
  CHECK(detect_parity(c) == Parity::even);
  CHECK(parity_defect(c, Parity::even) < 1e-15);
  CHECK(parity_defect(c, Parity::odd) > 1.0);
  CHECK(count_nodes(std::vector<double>{1.0, 0.0, 0.0, 2.0}) == 0);
  CHECK(count_nodes(std::vector<double>{1.0, 0.0, -2.0, 3.0}) == 2);
}

TEST_CASE("method names") {
  for (Method m : {Method::numerov, Method::wkb, Method::spt, Method::analytic})
    CHECK(parse_method(to_string(m)) == m);
  CHECK_THROWS_AS(parse_method("shooting"), std::invalid_argument);
  CHECK(to_string(Parity::odd) == "odd");
}

TEST_CASE("wavefunction csv") {
  const Grid g(4);
  EigenSolution sol;
  sol.wavefunction = {0.0, 0.5, 1.0, 0.5, 0.0};
  std::ostringstream out;
  write_wavefunction_csv(out, g, sol);
  const auto text = out.str();
  CHECK(text.rfind("x,psi,psi_sq\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}
