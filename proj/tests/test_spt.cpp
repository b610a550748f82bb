#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/hermite.hpp>

#include "cotwell/grid.hpp"
#include "cotwell/quadrature.hpp"
#include "cotwell/spt.hpp"

using namespace cotwell;

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// u = (a + a^dagger) / sqrt(2) in a truncated number basis.
Matrix position(std::size_t size) {
  Matrix u(size, std::vector<double>(size, 0.0));
  for (std::size_t n = 0; n + 1 < size; ++n) u[n][n + 1] = u[n + 1][n] = std::sqrt((n + 1) / 2.0);
  return u;
}

Matrix power(const Matrix& m, int p) {
  Matrix out = m;
  for (int i = 1; i < p; ++i) out = multiply(out, m);
  return out;
}

}  // namespace

TEST_CASE("quartic elements match the ladder-operator matrix") {
  const int size = 40;
  const auto u4 = power(position(size), 4);
  const double omega2 = 2.0 / 45.0;
  for (int r = 0; r < size - 8; ++r)
    for (int c = 0; c < size - 8; ++c) {
      const double ref = 2.0 / 945.0 * u4[r][c] / omega2;
      CHECK(xi4_matrix_element(r, c) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("sextic elements match the ladder-operator matrix") {
  const int size = 40;
  const auto u6 = power(position(size), 6);
  const double omega3 = std::pow(2.0 / 45.0, 1.5);
  for (int r = 0; r < size - 8; ++r)
    for (int c = 0; c < size - 8; ++c) {
      const double ref = u6[r][c] / omega3 / 4725.0;
      CHECK(xi6_matrix_element(r, c) == doctest::Approx(ref).epsilon(1e-12).scale(1.0));
    }
  CHECK(xi6_diagonal(2) == xi6_matrix_element(2, 2));
}

TEST_CASE("first and second order") {
  CHECK(first_order(0) == doctest::Approx(1.0 / 3.0 + 3.0 / 84.0 + std::sqrt(22.5) * 15.0 / 1680.0));
  // ground state: two couplings, |<2|W|0>|^2 = 2/196 and |<4|W|0>|^2 = 6/1764
  const double omega = std::sqrt(2.0 / 45.0);
  const double e2 = (2.0 / 196.0) / (-2.0 * omega) + (6.0 / 1764.0) / (-4.0 * omega);
  CHECK(second_order(0) == doctest::Approx(e2).epsilon(1e-14));
  CHECK(second_order(5) < second_order(4));
  SptOptions wide;
  wide.include_xi6_second_order = true;
  CHECK(second_order(0, wide) != second_order(0));
  CHECK(total_energy(0, wide).coefficients.size() == 3);
  CHECK_THROWS_AS(second_order(-1), std::invalid_argument);
}

TEST_CASE("total energy is the sum of its parts") {
  for (int n = 0; n < 10; ++n) {
    const auto lv = total_energy(n);
    CHECK(lv.e0 == doctest::Approx((n + 0.5) * std::sqrt(2.0 / 45.0)));
    CHECK(lv.total == doctest::Approx(lv.e0 + lv.e1 + lv.e2));
    for (const auto& [k, c] : lv.coefficients)
      CHECK(c == doctest::Approx(xi4_matrix_element(k, n) / (lv.e0 - OscillatorBasis{}.energy(k))));
  }
}

TEST_CASE("Hermite polynomials") {
  for (int n = 0; n < 12; ++n)
    for (double u : {-2.3, 0.0, 0.4, 3.1})
      CHECK(hermite(n, u) == doctest::Approx(boost::math::hermite(n, u)).epsilon(1e-13));
}

TEST_CASE("oscillator states are orthonormal") {
  // |u| <= 12 holds all the weight for n < 12.
  const OscillatorBasis basis;
  const double xi_max = 12.0 / std::sqrt(basis.omega());
  const auto rule = gauss_legendre(20);
  for (int m = 0; m < 12; ++m)
    for (int n = m; n < 12; ++n) {
      const double overlap = composite_gauss(
          [&](double xi) { return unperturbed_state(m, xi) * unperturbed_state(n, xi); }, -xi_max, xi_max, 200, rule);
      CHECK(overlap == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
    }
  CHECK(std::isfinite(unperturbed_state(60, 200.0)));
}

TEST_CASE("unperturbed state against the Hermite form") {
  const OscillatorBasis basis;
  for (int n : {0, 1, 4, 7})
    for (double xi : {-4.0, 0.3, 2.5}) {
      const double u = basis.u(xi);
      const double ref = std::pow(basis.omega() / std::numbers::pi, 0.25) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0)) *
                         boost::math::hermite(n, u) * std::exp(-u * u / 2);
      CHECK(unperturbed_state(n, xi) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("perturbed state on the box grid") {
  const Grid g(2000);
  for (int n : {0, 1, 9}) {
    const auto sol = perturbed_state(n, g);
    CHECK(norm_squared(sol.wavefunction, g) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sol.parity == (n % 2 ? Parity::odd : Parity::even));
    CHECK(parity_defect(sol.wavefunction, sol.parity) < 1e-12);
    CHECK(sol.method == Method::spt);
  }
}
