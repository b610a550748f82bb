#include "cotwell/eigen_solution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "cotwell/grid.hpp"
#include "cotwell/quadrature.hpp"

namespace cotwell {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::numerov: return "numerov";
    case Method::wkb: return "wkb";
    case Method::spt: return "spt";
    case Method::analytic: return "analytic";
  }
  return "unknown";
}

std::string_view to_string(Parity parity) {
  return parity == Parity::even ? "even" : "odd";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::numerov, Method::wkb, Method::spt, Method::analytic})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

double norm_squared(std::span<const double> samples, const Grid& grid) {
  if (samples.size() != grid.size())
    throw std::invalid_argument("norm: sample count does not match grid");
  const auto w = simpson_weights(static_cast<std::size_t>(grid.intervals()), grid.step());
  double sum = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) sum += w[k] * samples[k] * samples[k];
  return sum;
}

std::vector<double> normalize(std::span<const double> samples, const Grid& grid) {
  const double n2 = norm_squared(samples, grid);
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw std::invalid_argument("normalize: cannot normalize a zero function");
  const auto first = std::find_if(samples.begin(), samples.end(),
                                  [](double v) { return v != 0.0; });
  const double scale = (*first < 0.0 ? -1.0 : 1.0) / std::sqrt(n2);
  std::vector<double> out(samples.begin(), samples.end());
  for (double& v : out) v *= scale;
  return out;
}

int count_nodes(std::span<const double> samples) {
  int nodes = 0;
  double previous = 0.0;
  for (double v : samples) {
    if (v == 0.0) continue;
    if (previous != 0.0 && (v > 0.0) != (previous > 0.0)) ++nodes;
    previous = v;
  }
  return nodes;
}

double parity_defect(std::span<const double> samples, Parity parity) {
  const double sign = parity == Parity::even ? 1.0 : -1.0;
  const std::size_t n = samples.size();
  double peak = 0.0;
  double defect = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    peak = std::max(peak, std::fabs(samples[k]));
    defect = std::max(defect, std::fabs(samples[k] - sign * samples[n - 1 - k]));
  }
  return peak > 0.0 ? defect / peak : 0.0;
}

Parity detect_parity(std::span<const double> samples) {
  return parity_defect(samples, Parity::even) <= parity_defect(samples, Parity::odd)
             ? Parity::even
             : Parity::odd;
}

void write_wavefunction_csv(std::ostream& out, const Grid& grid,
                            const EigenSolution& solution) {
  out << "x,psi,psi_sq\n";
  char buf[96];
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double psi = solution.wavefunction[k];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", grid.node(k), psi, psi * psi);
    out << buf;
  }
}

}  // namespace cotwell
