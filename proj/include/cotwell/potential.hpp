#pragma once

#include <cmath>
#include <concepts>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cotwell {

class Grid;

/// Even-index Bernoulli numbers B_0, B_2, ..., B_{2 n_max}.
struct BernoulliTable {
  std::vector<long double> values;

  long double b2n(int n) const { return values.at(static_cast<std::size_t>(n)); }
  int max_index() const { return static_cast<int>(values.size()) - 1; }
};

/// B_0..B_{2 n_max} from the tangent-number recurrence. Agrees with
/// sum_{k=0}^{m} C(m+1,k) B_k = 0 but does not cancel.
BernoulliTable bernoulli(int n_max);

enum class WellShape {
  cotangent,
  /// Constant v0/3 inside the box. Only used to check the shooting solver
  /// against the infinite square well.
  flat,
};

/// Dimensionless well parameters and the evaluation policy.
struct PotentialModel {
  double v0 = 1.0;
  double series_switch_radius = 0.1;
  int series_order = 8;
  double wall_cap = 1e12;
  WellShape shape = WellShape::cotangent;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// Leading behaviour near either wall, v ~ residue / s + constant, where s is
/// the distance to the wall.
struct WallExpansion {
  double residue = 0.0;
  double constant = 0.0;
};

/// v(x) = v0 (1 - x cot x) / x^2 on [-pi, pi].
///
/// Below `series_switch_radius` the Bernoulli series replaces the closed form,
/// which loses digits to the 0/0 cancellation at the origin. The walls return
/// `wall_cap`. Evaluation is templated so the shooting solver can run in
/// extended precision.
class Potential {
 public:
  explicit Potential(PotentialModel model = {});

  const PotentialModel& model() const { return model_; }
  double v0() const { return model_.v0; }
  double minimum() const { return model_.v0 / 3.0; }

  template <std::floating_point T>
  T eval(T x) const;

  /// Truncated series -4 v0 sum_{n=1}^{order} (-1)^n (2x)^{2n-2} B_{2n}/(2n)!.
  template <std::floating_point T>
  T eval_series(T x, int order) const;

  /// v0 (1/3 + x^2/45), the O(x^2) truncation.
  double eval_quadratic(double x) const;

  /// dv/dx on the open interval.
  double derivative(double x) const;

  WallExpansion wall_expansion() const;

  /// Coefficient of x^{2n-2} in the series, without the v0 factor.
  long double series_coefficient(int n) const;

 private:
  template <std::floating_point T>
  T series_sum(T x, int order) const;

  PotentialModel model_;
  std::vector<long double> coefficients_;
};

/// Samples (x, v(x)) on every grid node, walls included.
std::vector<std::pair<double, double>> export_profile(const Potential& potential,
                                                      const Grid& grid);

/// Writes `x,v` with 12 significant digits.
void write_profile_csv(std::ostream& out,
                       const std::vector<std::pair<double, double>>& rows);

// ---------------------------------------------------------------------------

template <std::floating_point T>
T Potential::series_sum(T x, int order) const {
  const T y = x * x;
  T sum = 0;
  if (order <= static_cast<int>(coefficients_.size())) {
    for (int n = order; n >= 1; --n)
      sum = sum * y + static_cast<T>(coefficients_[static_cast<std::size_t>(n - 1)]);
  } else {
    for (int n = order; n >= 1; --n) sum = sum * y + static_cast<T>(series_coefficient(n));
  }
  return sum;
}

template <std::floating_point T>
T Potential::eval_series(T x, int order) const {
  if (order < 1) throw std::invalid_argument("eval_series: order must be >= 1");
  if (!(std::fabs(x) < std::numbers::pi_v<T>))
    throw std::domain_error("eval_series: |x| must be < pi");
  return static_cast<T>(model_.v0) * series_sum(x, order);
}

template <std::floating_point T>
T Potential::eval(T x) const {
  const T ax = std::fabs(x);
  const T pi = std::numbers::pi_v<T>;
  // The double-precision pi sits below the true pi, so accept it as the wall.
  if (ax > pi && ax != static_cast<T>(std::numbers::pi))
    throw std::domain_error("potential: |x| must be <= pi");
  if (ax >= static_cast<T>(std::numbers::pi)) return static_cast<T>(model_.wall_cap);
  const T v0 = static_cast<T>(model_.v0);
  if (model_.shape == WellShape::flat) return v0 / 3;
  if (ax <= static_cast<T>(model_.series_switch_radius))
    return v0 * series_sum(ax, model_.series_order);
  return v0 * (1 - ax / std::tan(ax)) / (ax * ax);
}

}  // namespace cotwell
