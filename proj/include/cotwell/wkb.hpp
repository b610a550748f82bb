#pragma once

#include <functional>

#include "cotwell/eigen_solution.hpp"
#include "cotwell/potential.hpp"

namespace cotwell {

class Grid;

/// A symmetric single well, increasing on (0, half_width).
struct WellProfile {
  std::function<double(double)> value;
  std::function<double(double)> slope;
  double minimum = 0.0;
  /// Turning points are searched on (0, half_width).
  double half_width = 0.0;
};

/// The full cotangent well.
WellProfile well_profile(const Potential& potential);
/// v0 (1/3 + x^2/45) on the real line (half_width = 100).
WellProfile quadratic_profile(const Potential& potential);

struct TurningPoints {
  double left = 0.0;
  double right = 0.0;
};

struct WkbLevel {
  int level = 0;
  double energy = 0.0;
  TurningPoints turning_points;
  double action = 0.0;
};

/// p(x) = sqrt(2 (eps - v(x))) on the classical region, zero outside.
class MomentumProfile {
 public:
  MomentumProfile(WellProfile well, double energy);

  double operator()(double x) const;
  const TurningPoints& turning_points() const { return turning_; }
  double energy() const { return energy_; }

 private:
  WellProfile well_;
  double energy_;
  TurningPoints turning_;
};

/// Hard-wall O(x^2) quantization in closed form (v0 = 1, n >= 1):
///   (1/8) [4 pi^2/135 + n^2/2 + sqrt(4 pi^2 n^2/135 + n^4/4)] + 1/3
double closed_form_energy(int n);

/// Infinite square well of width 2 pi shifted by 1/3: n^2/8 + 1/3.
double box_energy(int n);

/// x2 with v(x2) = eps on (0, half_width) by safeguarded Newton; x1 = -x2.
/// Throws std::domain_error for eps <= minimum.
TurningPoints turning_points(const WellProfile& well, double energy);
TurningPoints turning_points(const Potential& potential, double energy);

/// integral_{x1}^{x2} p dx, with x = x2 sin(theta) to remove the
/// square-root endpoint behaviour.
double action_integral(const WellProfile& well, double energy);
double action_integral(const Potential& potential, double energy);

/// d(action)/d(eps) = integral_{x1}^{x2} dx / p.
double action_slope(const WellProfile& well, double energy);

/// Solves action(eps) = (n + 1/2) pi to |residual| < tol.
WkbLevel quantize(const Potential& potential, int n, double tol = 1e-8);

/// Upward energy scan in fixed steps until the residual changes sign, then
/// Newton refinement. Slower; mirrors a hand-run scan.
WkbLevel quantize_scan(const Potential& potential, int n, double step = 1e-4,
                       double tol = 1e-8);

/// integral_{-pi}^{pi} sqrt(2 (eps - v_quad)) dx restricted to where the
/// root is real.
double hard_wall_action(const Potential& potential, double energy);

/// Solves hard_wall_action(eps) = n pi, n >= 1.
double hard_wall_quantize_integral(const Potential& potential, int n);

/// cos(sigma)/sqrt(p) (even n) or sin(sigma)/sqrt(p) (odd n), sigma = int_0^x p,
/// zero outside [x1 + cutoff, x2 - cutoff], normalized on the grid.
EigenSolution wkb_wavefunction(const Potential& potential, const WkbLevel& level,
                               const Grid& grid, double cutoff = 1e-3);

}  // namespace cotwell
