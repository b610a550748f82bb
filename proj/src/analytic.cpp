#include "cotwell/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cotwell/grid.hpp"
#include "cotwell/potential.hpp"

namespace cotwell {
namespace {

constexpr double kSeriesRadius = 0.1;

// Si(z) = sum_k (-1)^k z^{2k+1} / ((2k+1) (2k+1)!)
long double sine_integral(long double z) {
  long double term = z;  // (-1)^k z^{2k+1} / (2k+1)!
  long double sum = 0.0L;
  for (int k = 0; k < 60; ++k) {
    sum += term / (2 * k + 1);
    term *= -z * z / ((2.0L * k + 2) * (2.0L * k + 3));
    if (std::fabs(term) < 1e-30L) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    const double y = x * x;
    return 1.0 - y / 6.0 + y * y / 120.0;
  }
  return std::sin(x) / x;
}

}  // namespace

AnalyticGroundState analytic_ground_state() {
  static const double amplitude = static_cast<double>(
      1.0L / std::sqrt(2.0L * sine_integral(2.0L * std::numbers::pi_v<long double>)));
  return {amplitude, 0.5};
}

double ground_state(double x) {
  if (std::fabs(x) > std::numbers::pi) throw std::domain_error("ground_state: |x| > pi");
  if (std::fabs(x) == std::numbers::pi) return 0.0;
  return analytic_ground_state().amplitude * sinc(x);
}

double sinc_second_derivative(double x) {
  if (std::fabs(x) < kSeriesRadius) {
    // sum_{k>=1} (-1)^k (2k)(2k-1) x^{2k-2} / (2k+1)!
    const double y = x * x;
    double term = -1.0 / 3.0;  // k = 1
    double sum = term;
    for (int k = 2; k < 12; ++k) {
      term *= -y * (2.0 * k) * (2.0 * k - 1) /
              ((2.0 * k - 2) * (2.0 * k - 3) * (2.0 * k) * (2.0 * k + 1));
      sum += term;
    }
    return sum;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  return -s / x - 2.0 * c / (x * x) + 2.0 * s / (x * x * x);
}

double ode_residual(double x) {
  static const Potential potential{};
  const auto [amplitude, energy] = analytic_ground_state();
  const double phi = amplitude * sinc(x);
  const double phi2 = amplitude * sinc_second_derivative(x);
  return phi2 - 2.0 * potential.eval(x) * phi + 2.0 * energy * phi;
}

EigenSolution analytic_solution(const Grid& grid) {
  std::vector<double> samples(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) samples[k] = ground_state(grid.node(k));
  EigenSolution sol;
  sol.level = 0;
  sol.energy = analytic_ground_state().energy;
  sol.wavefunction = normalize(samples, grid);
  sol.node_count = count_nodes(sol.wavefunction);
  sol.parity = Parity::even;
  sol.method = Method::analytic;
  return sol;
}

}  // namespace cotwell
