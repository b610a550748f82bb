#include "cotwell/spt.hpp"

#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cotwell/grid.hpp"

namespace cotwell {
namespace {

void require_level(int n) {
  if (n < 0) throw std::invalid_argument("spt: level must be >= 0");
}

// sqrt((n+1)(n+2)...(n+k)) as one radical.
double rising_root(int n, int k) {
  double product = 1.0;
  for (int j = 1; j <= k; ++j) product *= static_cast<double>(n + j);
  return std::sqrt(product);
}

// Couplings of level n under the active perturbation, excluding n itself.
std::vector<int> coupled_levels(int n, const SptOptions& options) {
  std::vector<int> out;
  const int reach = options.include_xi6_second_order ? 6 : 4;
  for (int d = -reach; d <= reach; d += 2)
    if (d != 0 && n + d >= 0) out.push_back(n + d);
  return out;
}

double perturbation_element(int k, int n, const SptOptions& options) {
  double w = xi4_matrix_element(k, n);
  if (options.include_xi6_second_order) w += xi6_matrix_element(k, n);
  return w;
}

}  // namespace

double xi4_matrix_element(int row, int col) {
  require_level(row);
  require_level(col);
  // (1/2 omega)^2 * 2/945 = 1/84
  const int lo = std::min(row, col);
  switch (std::abs(row - col)) {
    case 0: return (6.0 * lo * lo + 6.0 * lo + 3.0) / 84.0;
    case 2: return (4.0 * lo + 6.0) * rising_root(lo, 2) / 84.0;
    case 4: return rising_root(lo, 4) / 84.0;
    default: return 0.0;
  }
}

double xi6_matrix_element(int row, int col) {
  require_level(row);
  require_level(col);
  const double scale = std::pow(45.0 / 8.0, 1.5) / 4725.0;  // (1/2 omega)^3 / 4725
  const double lo = std::min(row, col);
  switch (std::abs(row - col)) {
    case 0: return scale * (20.0 * lo * lo * lo + 30.0 * lo * lo + 40.0 * lo + 15.0);
    case 2: return scale * 15.0 * (lo * lo + 3.0 * lo + 3.0) * rising_root(static_cast<int>(lo), 2);
    case 4: return scale * (6.0 * lo + 15.0) * rising_root(static_cast<int>(lo), 4);
    case 6: return scale * rising_root(static_cast<int>(lo), 6);
    default: return 0.0;
  }
}

double xi6_diagonal(int n) { return xi6_matrix_element(n, n); }

double first_order(int n) {
  require_level(n);
  return 1.0 / 3.0 + xi4_matrix_element(n, n) + xi6_diagonal(n);
}

double second_order(int n, const SptOptions& options) {
  require_level(n);
  const OscillatorBasis basis;
  double sum = 0.0;
  for (int k : coupled_levels(n, options)) {
    const double w = perturbation_element(k, n, options);
    sum += w * w / (basis.energy(n) - basis.energy(k));
  }
  return sum;
}

double hermite(int n, double u) {
  require_level(n);
  double h_prev = 1.0;
  if (n == 0) return h_prev;
  double h = 2.0 * u;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * u * h - 2.0 * k * h_prev;
    h_prev = h;
    h = next;
  }
  return h;
}

double unperturbed_state(int n, double xi) {
  require_level(n);
  const OscillatorBasis basis;
  const double u = basis.u(xi);
  // h_{k+1} = sqrt(2/(k+1)) u h_k - sqrt(k/(k+1)) h_{k-1}, h_0 = pi^{-1/4} e^{-u^2/2}
  double h_prev = 0.0;
  double h = std::exp(-0.5 * u * u) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * u * h - std::sqrt(static_cast<double>(k) / (k + 1)) * h_prev;
    h_prev = h;
    h = next;
  }
  return std::sqrt(std::sqrt(basis.omega())) * h;
}

SptLevel total_energy(int n, const SptOptions& options) {
  require_level(n);
  const OscillatorBasis basis;
  SptLevel level;
  level.level = n;
  level.e0 = basis.energy(n);
  level.e1 = first_order(n);
  level.e2 = second_order(n, options);
  level.total = level.e0 + level.e1 + level.e2;
  for (int k : coupled_levels(n, options))
    level.coefficients[k] = perturbation_element(k, n, options) / (basis.energy(n) - basis.energy(k));
  return level;
}

EigenSolution perturbed_state(int n, const Grid& grid, const SptOptions& options) {
  const SptLevel level = total_energy(n, options);
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xi = grid.node(i);
    double value = unperturbed_state(n, xi);
    for (const auto& [k, c] : level.coefficients) value += c * unperturbed_state(k, xi);
    samples[i] = value;
  }
  EigenSolution sol;
  sol.level = n;
  sol.energy = level.total;
  sol.wavefunction = normalize(samples, grid);
  sol.node_count = count_nodes(sol.wavefunction);
  sol.parity = n % 2 == 0 ? Parity::even : Parity::odd;
  sol.method = Method::spt;
  sol.notes = "oscillator basis sampled on [-pi, pi] without re-orthogonalization";
  return sol;
}

}  // namespace cotwell
