#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cotwell {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds the n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/// Integrates f over [a, b] with `panels` equal panels of the given rule.
double composite_gauss(const std::function<double(double)>& f, double a,
                       double b, int panels, const GaussRule& rule);

/// Doubles the panel count until two successive estimates agree to
/// `rel_tol` (relative) or `max_panels` is reached.
double adaptive_composite_gauss(const std::function<double(double)>& f,
                                double a, double b, double rel_tol,
                                int start_panels = 4, int max_panels = 4096);

/// Composite Simpson weights for n_intervals (even) on a uniform grid, already
/// multiplied by h.
std::vector<double> simpson_weights(std::size_t n_intervals, double h);

/// Composite Simpson integral of uniformly spaced samples (odd count).
double simpson(std::span<const double> samples, double h);

}  // namespace cotwell
