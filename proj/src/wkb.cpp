#include "cotwell/wkb.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cotwell/grid.hpp"
#include "cotwell/quadrature.hpp"

namespace cotwell {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadratureTol = 1e-13;

// Safeguarded Newton: keeps a sign bracket [lo, hi] of f and falls back to
// bisection whenever the Newton step leaves it.
template <class F, class DF>
double newton_bisect(F&& f, DF&& df, double lo, double hi, double f_tol, double x_tol) {
  double f_lo = f(lo);
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 300; ++iter) {
    const double fx = f(x);
    if (std::fabs(fx) <= f_tol) return x;
    if ((fx < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
    }
    if (hi - lo <= x_tol) return 0.5 * (lo + hi);
    const double slope = df(x);
    double next = (slope > 0.0 && std::isfinite(slope)) ? x - fx / slope : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

void require_symmetric_well(const Potential& potential) {
  if (potential.model().shape != WellShape::cotangent)
    throw std::invalid_argument("wkb: requires the cotangent well");
}

}  // namespace

WellProfile well_profile(const Potential& potential) {
  require_symmetric_well(potential);
  return {[potential](double x) { return potential.eval(x); },
          [potential](double x) { return potential.derivative(x); }, potential.minimum(), kPi};
}

WellProfile quadratic_profile(const Potential& potential) {
  const double v0 = potential.v0();
  return {[v0](double x) { return v0 * (1.0 / 3.0 + x * x / 45.0); },
          [v0](double x) { return v0 * 2.0 * x / 45.0; }, v0 / 3.0, 100.0};
}

MomentumProfile::MomentumProfile(WellProfile well, double energy)
    : well_(std::move(well)), energy_(energy), turning_(cotwell::turning_points(well_, energy)) {}

double MomentumProfile::operator()(double x) const {
  if (x <= turning_.left || x >= turning_.right) return 0.0;
  const double gap = energy_ - well_.value(x);
  return gap > 0.0 ? std::sqrt(2.0 * gap) : 0.0;
}

double closed_form_energy(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_energy: n must be >= 1");
  const double nn = static_cast<double>(n) * n;
  const double a = 4.0 * kPi * kPi / 135.0;
  return (a + nn / 2.0 + std::sqrt(a * nn + nn * nn / 4.0)) / 8.0 + 1.0 / 3.0;
}

double box_energy(int n) {
  if (n < 1) throw std::invalid_argument("box_energy: n must be >= 1");
  return static_cast<double>(n) * n / 8.0 + 1.0 / 3.0;
}

TurningPoints turning_points(const WellProfile& well, double energy) {
  if (!(energy > well.minimum))
    throw std::domain_error("turning_points: energy " + std::to_string(energy) +
                            " is below potential minimum");
  const double hi = well.half_width;
  if (!(well.value(hi) > energy))
    throw std::domain_error("turning_points: energy above the well edge");
  auto f = [&](double x) { return well.value(x) - energy; };
  auto df = [&](double x) { return x < hi ? well.slope(x) : 0.0; };
  const double x2 = newton_bisect(f, df, 0.0, hi, 0.0, 4e-16 * hi);
  return {-x2, x2};
}

TurningPoints turning_points(const Potential& potential, double energy) {
  return turning_points(well_profile(potential), energy);
}

double action_integral(const WellProfile& well, double energy) {
  const double x2 = turning_points(well, energy).right;
  auto integrand = [&](double theta) {
    const double gap = energy - well.value(x2 * std::sin(theta));
    return gap > 0.0 ? std::sqrt(2.0 * gap) * x2 * std::cos(theta) : 0.0;
  };
  return 2.0 * adaptive_composite_gauss(integrand, 0.0, kPi / 2.0, kQuadratureTol);
}

double action_integral(const Potential& potential, double energy) {
  return action_integral(well_profile(potential), energy);
}

double action_slope(const WellProfile& well, double energy) {
  const double x2 = turning_points(well, energy).right;
  auto integrand = [&](double theta) {
    const double gap = energy - well.value(x2 * std::sin(theta));
    return gap > 0.0 ? x2 * std::cos(theta) / std::sqrt(2.0 * gap) : 0.0;
  };
  return 2.0 * adaptive_composite_gauss(integrand, 0.0, kPi / 2.0, 1e-10);
}

namespace {

WkbLevel refine_level(const WellProfile& well, int n, double lo, double hi, double tol) {
  const double target = (n + 0.5) * kPi;
  auto residual = [&](double e) { return e > well.minimum ? action_integral(well, e) - target : -target; };
  auto slope = [&](double e) { return action_slope(well, e); };
  const double energy = newton_bisect(residual, slope, lo, hi, tol, 0.0);
  WkbLevel level;
  level.level = n;
  level.energy = energy;
  level.turning_points = turning_points(well, energy);
  level.action = action_integral(well, energy);
  if (!(std::fabs(level.action - target) < tol))
    throw SolverError("wkb: quantization residual " + std::to_string(level.action - target) +
                      " above tolerance for level " + std::to_string(n));
  return level;
}

}  // namespace

WkbLevel quantize(const Potential& potential, int n, double tol) {
  if (n < 0) throw std::invalid_argument("quantize: n must be >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("quantize: tol must be > 0");
  const auto well = well_profile(potential);
  const double target = (n + 0.5) * kPi;
  double width = 1.0;
  while (action_integral(well, well.minimum + width) < target) width *= 2.0;
  return refine_level(well, n, well.minimum, well.minimum + width, tol);
}

WkbLevel quantize_scan(const Potential& potential, int n, double step, double tol) {
  if (n < 0) throw std::invalid_argument("quantize_scan: n must be >= 0");
  if (!(step > 0.0)) throw std::invalid_argument("quantize_scan: step must be > 0");
  const auto well = well_profile(potential);
  const double target = (n + 0.5) * kPi;
  for (long long i = 1;; ++i) {
    const double e = well.minimum + static_cast<double>(i) * step;
    if (action_integral(well, e) >= target)
      return refine_level(well, n, e - step, e, tol);
  }
}

double hard_wall_action(const Potential& potential, double energy) {
  const double v0 = potential.v0();
  if (!(energy > v0 / 3.0)) return 0.0;
  const double x_turn = std::sqrt(45.0 * (energy / v0 - 1.0 / 3.0));
  if (x_turn < kPi) return action_integral(quadratic_profile(potential), energy);
  auto integrand = [&](double x) {
    const double gap = energy - potential.eval_quadratic(x);
    return gap > 0.0 ? std::sqrt(2.0 * gap) : 0.0;
  };
  return adaptive_composite_gauss(integrand, -kPi, kPi, kQuadratureTol);
}

double hard_wall_quantize_integral(const Potential& potential, int n) {
  if (n < 1) throw std::invalid_argument("hard_wall_quantize_integral: n must be >= 1");
  const double target = n * kPi;
  const double base = potential.v0() / 3.0;
  double lo = base;
  double hi = base + 1.0;
  while (hard_wall_action(potential, hi) < target) {
    lo = hi;
    hi = base + 2.0 * (hi - base);
  }
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (hard_wall_action(potential, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EigenSolution wkb_wavefunction(const Potential& potential, const WkbLevel& level,
                               const Grid& grid, double cutoff) {
  const MomentumProfile momentum(well_profile(potential), level.energy);
  const double limit = momentum.turning_points().right - cutoff;
  const bool even = level.level % 2 == 0;
  static const GaussRule rule = gauss_legendre(8);

  std::vector<double> samples(grid.size(), 0.0);
  const std::size_t center = grid.center();
  const std::size_t last = grid.size() - 1;
  double sigma = 0.0;
  for (std::size_t k = center; k <= last; ++k) {
    const double x = grid.node(k);
    if (x > limit) break;
    if (k > center)
      sigma += composite_gauss([&](double t) { return momentum(t); }, grid.node(k - 1), x, 1, rule);
    const double amplitude = even ? std::cos(sigma) : std::sin(sigma);
    const double value = amplitude / std::sqrt(momentum(x));
    samples[k] = value;
    samples[last - k] = even ? value : -value;
  }

  EigenSolution sol;
  sol.level = level.level;
  sol.energy = level.energy;
  try {
    sol.wavefunction = normalize(samples, grid);
  } catch (const std::invalid_argument&) {
    throw SolverError("wkb: classical region narrower than the cutoff for level " +
                      std::to_string(level.level));
  }
  sol.node_count = count_nodes(sol.wavefunction);
  sol.parity = even ? Parity::even : Parity::odd;
  sol.method = Method::wkb;
  char note[64];
  std::snprintf(note, sizeof note, "turning-point cutoff %g", cutoff);
  sol.notes = note;
  return sol;
}

}  // namespace cotwell
