#pragma once

#include <cmath>
#include <map>

#include "cotwell/eigen_solution.hpp"

namespace cotwell {

class Grid;

/// Harmonic oscillator H0 = p^2/2 + omega^2 xi^2 / 2 with omega^2 = 2/45, the
/// quadratic term of the well at v0 = 1. u = omega^{1/2} xi.
struct OscillatorBasis {
  double omega() const { return std::sqrt(2.0 / 45.0); }
  double omega_squared() const { return 2.0 / 45.0; }
  double u(double xi) const { return std::sqrt(omega()) * xi; }
  double energy(int n) const { return (n + 0.5) * omega(); }
};

struct SptOptions {
  /// Adds the xi^6 couplings (|dn| = 2, 4, 6) to the second-order sum and the
  /// first-order state. Off by default: the reference treatment keeps xi^6 at
  /// first order only.
  bool include_xi6_second_order = false;
};

/// <row| 2 xi^4 / 945 |col>. Nonzero only for |row - col| in {0, 2, 4}.
double xi4_matrix_element(int row, int col);

/// <row| xi^6 / 4725 |col>. Nonzero only for |row - col| in {0, 2, 4, 6}.
double xi6_matrix_element(int row, int col);

/// <n| xi^6 / 4725 |n> = (1/4725) (1/2 omega)^3 (20n^3 + 30n^2 + 40n + 15).
double xi6_diagonal(int n);

/// <n|W|n> = 1/3 + (6n^2 + 6n + 3)/84 + sqrt(45/2)(20n^3 + 30n^2 + 40n + 15)/1680.
double first_order(int n);

/// sum_k |<k|W|n>|^2 / (E_n - E_k).
double second_order(int n, const SptOptions& options = {});

/// Physicists' Hermite polynomial by the three-term recurrence.
double hermite(int n, double u);

/// (omega/pi)^{1/4} (2^n n!)^{-1/2} H_n(u) exp(-u^2/2), evaluated with the
/// normalized recurrence so large |u| does not overflow.
double unperturbed_state(int n, double xi);

struct SptLevel {
  int level = 0;
  double e0 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double total = 0.0;
  /// c_k = <k|W|n> / (E_n - E_k) of the first-order state.
  std::map<int, double> coefficients;
};

SptLevel total_energy(int n, const SptOptions& options = {});

/// psi_n + sum_k c_k psi_k sampled on the grid, then normalized there.
EigenSolution perturbed_state(int n, const Grid& grid, const SptOptions& options = {});

}  // namespace cotwell
