#include "cotwell/potential.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "cotwell/grid.hpp"

namespace cotwell {

BernoulliTable bernoulli(int n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli: n_max must be >= 0");
  // Tangent numbers T_1..T_n by the all-positive triangle recurrence, then
  // B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)). The textbook alternating
  // recurrence loses about two bits per index.
  std::vector<long double> t(static_cast<std::size_t>(n_max) + 1, 0.0L);
  if (n_max >= 1) t[1] = 1.0L;
  for (int k = 2; k <= n_max; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n_max; ++k)
    for (int j = k; j <= n_max; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];

  BernoulliTable table;
  table.values.push_back(1.0L);
  for (int k = 1; k <= n_max; ++k) {
    const long double four_k = std::ldexp(1.0L, 2 * k);
    const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
    table.values.push_back(sign * 2.0L * k * t[k] / (four_k * (four_k - 1.0L)));
  }
  return table;
}

void PotentialModel::validate() const {
  if (!(v0 > 0.0)) throw std::invalid_argument("potential: v0 must be > 0");
  if (!(series_switch_radius > 0.0 && series_switch_radius <= 1.0))
    throw std::invalid_argument("potential: series_switch_radius must be in (0, 1]");
  if (series_order < 4) throw std::invalid_argument("potential: series_order must be >= 4");
  if (!(wall_cap >= 1e9)) throw std::invalid_argument("potential: wall_cap must be >= 1e9");
}

Potential::Potential(PotentialModel model) : model_(model) {
  model_.validate();
  coefficients_.reserve(static_cast<std::size_t>(model_.series_order));
  for (int n = 1; n <= model_.series_order; ++n) coefficients_.push_back(series_coefficient(n));
}

long double Potential::series_coefficient(int n) const {
  // -4 (-1)^n 2^{2n-2} B_{2n} / (2n)!
  static thread_local BernoulliTable cache;
  if (cache.max_index() < n) cache = bernoulli(std::max(n, 16));
  long double factorial = 1.0L;
  for (int k = 2; k <= 2 * n; ++k) factorial *= k;
  const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
  return -4.0L * sign * std::ldexp(1.0L, 2 * n - 2) * cache.b2n(n) / factorial;
}

double Potential::eval_quadratic(double x) const {
  return model_.v0 * (1.0 / 3.0 + x * x / 45.0);
}

double Potential::derivative(double x) const {
  const double ax = std::fabs(x);
  if (!(ax < std::numbers::pi)) throw std::domain_error("derivative: |x| must be < pi");
  if (model_.shape == WellShape::flat) return 0.0;
  double slope = 0.0;
  if (ax <= model_.series_switch_radius) {
    // d/dx sum c_n x^{2n-2}
    const double y = ax * ax;
    for (int n = model_.series_order; n >= 2; --n)
      slope = slope * y + static_cast<double>((2 * n - 2) * coefficients_[static_cast<std::size_t>(n - 1)]);
    slope *= ax;
  } else {
    const double s = std::sin(ax);
    const double u = ax * std::cos(ax) / s;
    const double du = std::cos(ax) / s - ax / (s * s);
    slope = -du / (ax * ax) - 2.0 * (1.0 - u) / (ax * ax * ax);
  }
  slope *= model_.v0;
  return x < 0.0 ? -slope : slope;
}

WallExpansion Potential::wall_expansion() const {
  if (model_.shape == WellShape::flat) return {0.0, model_.v0 / 3.0};
  constexpr double pi = std::numbers::pi;
  return {model_.v0 / pi, 2.0 * model_.v0 / (pi * pi)};
}

std::vector<std::pair<double, double>> export_profile(const Potential& potential,
                                                      const Grid& grid) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.node(k);
    rows.emplace_back(x, potential.eval(x));
  }
  return rows;
}

void write_profile_csv(std::ostream& out,
                       const std::vector<std::pair<double, double>>& rows) {
  out << "x,v\n";
  char buf[64];
  for (const auto& [x, v] : rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", x, v);
    out << buf;
  }
}

}  // namespace cotwell
