#pragma once

#include "cotwell/eigen_solution.hpp"

namespace cotwell {

class Grid;

/// phi(x) = A sin(x)/x with eps = 1/2, the exact ground state at v0 = 1.
struct AnalyticGroundState {
  double amplitude;
  double energy;
};

/// A = (integral_{-pi}^{pi} sin^2 x / x^2 dx)^{-1/2} = (2 Si(2 pi))^{-1/2}.
AnalyticGroundState analytic_ground_state();

/// A sin(x)/x, equal to A at the origin. Throws std::domain_error for |x| > pi.
double ground_state(double x);

/// Second derivative of sin(x)/x, series below |x| = 0.1.
double sinc_second_derivative(double x);

/// phi'' - 2 v(x) phi + 2 eps phi with v0 = 1, eps = 1/2 and the library
/// potential (series branch included). Requires 0 < |x| < pi.
double ode_residual(double x);

/// The ground state sampled on `grid` and Simpson-normalized there.
EigenSolution analytic_solution(const Grid& grid);

}  // namespace cotwell
