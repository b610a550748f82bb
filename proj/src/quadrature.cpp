#include "cotwell/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cotwell {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    long double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    long double pp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p1 = 1.0L;
      long double p2 = 0.0L;
      for (int j = 1; j <= n; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j - 1.0L) * z * p2 - (j - 1.0L) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0L);
      const long double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-19L) break;
    }
    rule.nodes[i - 1] = static_cast<double>(-z);
    rule.nodes[n - i] = static_cast<double>(z);
    const auto w = static_cast<double>(2.0L / ((1.0L - z * z) * pp * pp));
    rule.weights[i - 1] = w;
    rule.weights[n - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double composite_gauss(const std::function<double(double)>& f, double a,
                       double b, int panels, const GaussRule& rule) {
  if (panels < 1) throw std::invalid_argument("composite_gauss: panels < 1");
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    sum += half * panel;
  }
  return sum;
}

double adaptive_composite_gauss(const std::function<double(double)>& f,
                                double a, double b, double rel_tol,
                                int start_panels, int max_panels) {
  static const GaussRule rule = gauss_legendre(16);
  int panels = start_panels;
  double previous = composite_gauss(f, a, b, panels, rule);
  while (panels < max_panels) {
    panels *= 2;
    const double current = composite_gauss(f, a, b, panels, rule);
    if (std::fabs(current - previous) <= rel_tol * std::fabs(current) ||
        current == previous)
      return current;
    previous = current;
  }
  return previous;
}

std::vector<double> simpson_weights(std::size_t n_intervals, double h) {
  if (n_intervals == 0 || n_intervals % 2 != 0)
    throw std::invalid_argument("simpson_weights: interval count must be even");
  std::vector<double> w(n_intervals + 1);
  for (std::size_t k = 0; k <= n_intervals; ++k) {
    if (k == 0 || k == n_intervals)
      w[k] = h / 3.0;
    else
      w[k] = (k % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
  }
  return w;
}

double simpson(std::span<const double> samples, double h) {
  if (samples.size() < 3)
    throw std::invalid_argument("simpson: need at least three samples");
  const auto w = simpson_weights(samples.size() - 1, h);
  double sum = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) sum += w[k] * samples[k];
  return sum;
}

}  // namespace cotwell
