#pragma once

#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cotwell/eigen_solution.hpp"
#include "cotwell/grid.hpp"
#include "cotwell/potential.hpp"

namespace cotwell {

/// How the shooting solver treats the two walls, where v has a simple pole.
enum class WallScheme {
  /// psi ~ c (s + r s^2 + a3 s^3) near each wall supplies the finite limit of
  /// g psi there; the target is the extrapolated wall amplitude psi_N.
  /// Fourth-order accurate.
  series,
  /// g_0 psi_0 = 0 and the target is the last interior node psi_{N-1}.
  /// First-order accurate; kept to reproduce published tables.
  last_interior,
};

/// One Numerov advance for psi'' = -g psi:
///   psi_{k+1} = [(2 - 5h^2 g_k/6) psi_k - (1 + h^2 g_{k-1}/12) psi_{k-1}]
///               / (1 + h^2 g_{k+1}/12)
/// Throws std::domain_error when the denominator vanishes.
template <std::floating_point T>
T numerov_step(T psi_k, T psi_km1, T g_km1, T g_k, T g_kp1, T h) {
  const T h2 = h * h;
  const T denom = 1 + h2 * g_kp1 / 12;
  if (denom == 0) throw std::domain_error("numerov_step: zero denominator, step too large");
  return ((2 - 5 * h2 * g_k / 6) * psi_k - (1 + h2 * g_km1 / 12) * psi_km1) / denom;
}

struct ShootingTrajectory {
  std::vector<double> samples;
  double terminal = 0.0;
  int nodes = 0;
};

struct NumerovOptions {
  double seed = 1e-4;
  double scan_step = 1e-3;
  double tol = 1e-10;
  /// Scanning stops here; fewer levels below it is a SolverError.
  double energy_max = 500.0;
  WallScheme wall = WallScheme::series;
  bool parallel = true;
};

/// Precomputes v(x_k) on a grid in extended precision and shoots from the
/// left wall. Immutable after construction; safe to share across threads.
class Shooter {
 public:
  Shooter(const Potential& potential, const Grid& grid,
          WallScheme wall = WallScheme::series, double seed = 1e-4);

  /// psi_0 = 0, psi_1 = seed, the rest by numerov_step.
  ShootingTrajectory integrate(double energy) const;

  /// Signed boundary defect scaled by max|psi|; zero at an eigenvalue.
  long double mismatch(long double energy) const;

  /// Bisection on `mismatch`; stops when the bracket is narrower than `tol`
  /// or cannot shrink further. Throws SolverError without a sign change.
  long double refine(long double lo, long double hi, long double tol) const;

  const Grid& grid() const { return grid_; }
  double minimum() const { return minimum_; }
  WallScheme wall() const { return wall_; }

 private:
  long double shoot(long double energy, std::vector<long double>* samples) const;
  void check_energy(long double energy) const;

  Grid grid_;
  WallScheme wall_;
  long double seed_;
  long double h_;
  double minimum_;
  WallExpansion expansion_;
  std::vector<long double> v_;
};

ShootingTrajectory integrate(const Potential& potential, const Grid& grid, double energy,
                             double seed = 1e-4, WallScheme wall = WallScheme::series);

double terminal_mismatch(const Potential& potential, const Grid& grid, double energy,
                         WallScheme wall = WallScheme::series);

double find_eigenvalue(const Potential& potential, const Grid& grid,
                       std::pair<double, double> bracket, double tol,
                       WallScheme wall = WallScheme::series);

/// Brackets ε_lo < ε_hi around the first `n_levels` sign changes of the
/// mismatch, scanning upward from the potential minimum.
std::vector<std::pair<double, double>> scan_brackets(const Shooter& shooter, int n_levels,
                                                     const NumerovOptions& options);

/// Lowest `n_levels` states, sorted by energy, with node_count == level.
std::vector<EigenSolution> solve_spectrum(const Potential& potential, const Grid& grid,
                                          int n_levels, const NumerovOptions& options = {});

/// Normalized eigenfunction at an already converged energy.
EigenSolution numerov_solution(const Shooter& shooter, int level, double energy);

}  // namespace cotwell
