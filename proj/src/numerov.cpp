#include "cotwell/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <thread>

namespace cotwell {
namespace {

constexpr long double kOverflowGuard = 1e150L;

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 16u));
}

void validate(const NumerovOptions& options) {
  if (!(options.seed > 0.0)) throw std::invalid_argument("numerov: seed must be > 0");
  if (!(options.scan_step > 0.0)) throw std::invalid_argument("numerov: scan_step must be > 0");
  if (!(options.tol > 0.0)) throw std::invalid_argument("numerov: tol must be > 0");
}

}  // namespace

Shooter::Shooter(const Potential& potential, const Grid& grid, WallScheme wall, double seed)
    : grid_(grid),
      wall_(wall),
      seed_(seed),
      h_(grid.step_ld()),
      minimum_(potential.minimum()),
      expansion_(potential.wall_expansion()) {
  if (grid.intervals() < 100)
    throw std::invalid_argument("numerov: grid needs at least 100 intervals");
  if (!(seed > 0.0)) throw std::invalid_argument("numerov: seed must be > 0");
  v_.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) v_[k] = potential.eval(grid.node_ld(k));
}

void Shooter::check_energy(long double energy) const {
  if (!(energy > minimum_))
    throw std::domain_error("numerov: energy " + std::to_string(static_cast<double>(energy)) +
                            " is below potential minimum " + std::to_string(minimum_));
}

long double Shooter::shoot(long double energy, std::vector<long double>* samples) const {
  check_energy(energy);
  const std::size_t n = static_cast<std::size_t>(grid_.intervals());
  const long double h = h_;
  const long double h2 = h * h;
  auto g = [&](std::size_t k) { return 2.0L * (energy - v_[k]); };

  // psi ~ c (s + r s^2 + a3 s^3) next to a wall, so g psi -> -2 r c there.
  const long double r = expansion_.residue;
  const long double a3 = (r * r + expansion_.constant - energy) / 3.0L;
  const long double wall_slope_scale = h + r * h2 + a3 * h2 * h;

  long double psi_prev = 0.0L;
  long double psi = seed_;
  long double peak = std::fabs(psi);
  if (samples) {
    samples->assign(n + 1, 0.0L);
    (*samples)[1] = psi;
  }

  // (1 + h^2 g_0/12) psi_0 in the first step; psi_0 = 0 but g_0 psi_0 is finite.
  long double left_term = 0.0L;
  if (wall_ == WallScheme::series) {
    const long double c_left = psi / wall_slope_scale;
    left_term = h2 * (-2.0L * r * c_left) / 12.0L;
  }

  long double rhs_last = 0.0L;
  for (std::size_t k = 1; k < n; ++k) {
    long double next;
    if (k == 1) {
      next = numerov_step(psi, 0.0L, 0.0L, g(1), g(2), h) - left_term / (1.0L + h2 * g(2) / 12.0L);
    } else {
      next = numerov_step(psi, psi_prev, g(k - 1), g(k), g(k + 1), h);
    }
    if (k == n - 1)
      rhs_last = (2.0L - 5.0L * h2 * g(k) / 6.0L) * psi - (1.0L + h2 * g(k - 1) / 12.0L) * psi_prev;
    psi_prev = psi;
    psi = next;
    if (k + 1 < n) peak = std::max(peak, std::fabs(psi));
    if (samples) (*samples)[k + 1] = psi;
    if (std::fabs(psi) > kOverflowGuard) {
      const long double scale = 1.0L / kOverflowGuard;
      psi *= scale;
      psi_prev *= scale;
      peak *= scale;
      rhs_last *= scale;
      if (samples)
        for (std::size_t j = 0; j <= k + 1; ++j) (*samples)[j] *= scale;
    }
  }

  // psi_prev now holds psi_{N-1}.
  long double defect;
  if (wall_ == WallScheme::series) {
    const long double c_right = psi_prev / wall_slope_scale;
    defect = rhs_last - h2 * (-2.0L * r * c_right) / 12.0L;
  } else {
    defect = psi_prev;
  }
  return defect / peak;
}

ShootingTrajectory Shooter::integrate(double energy) const {
  std::vector<long double> raw;
  shoot(energy, &raw);
  ShootingTrajectory out;
  out.samples.assign(raw.begin(), raw.end());
  out.terminal = out.samples.back();
  out.nodes = count_nodes(std::span<const double>(out.samples).subspan(1, out.samples.size() - 2));
  return out;
}

long double Shooter::mismatch(long double energy) const { return shoot(energy, nullptr); }

long double Shooter::refine(long double lo, long double hi, long double tol) const {
  if (lo > hi) std::swap(lo, hi);
  long double f_lo = mismatch(lo);
  if (f_lo == 0.0L) return lo;
  if (lo == hi) throw SolverError("numerov: degenerate bracket without a root");
  const long double f_hi = mismatch(hi);
  if (f_hi == 0.0L) return hi;
  if ((f_lo > 0.0L) == (f_hi > 0.0L))
    throw SolverError("numerov: no sign change in bracket [" + std::to_string(static_cast<double>(lo)) +
                      ", " + std::to_string(static_cast<double>(hi)) + "]");
  while (hi - lo > tol) {
    const long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const long double f_mid = mismatch(mid);
    if (f_mid == 0.0L) return mid;
    if ((f_mid > 0.0L) == (f_lo > 0.0L)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

ShootingTrajectory integrate(const Potential& potential, const Grid& grid, double energy,
                             double seed, WallScheme wall) {
  return Shooter(potential, grid, wall, seed).integrate(energy);
}

double terminal_mismatch(const Potential& potential, const Grid& grid, double energy,
                         WallScheme wall) {
  return static_cast<double>(Shooter(potential, grid, wall).mismatch(energy));
}

double find_eigenvalue(const Potential& potential, const Grid& grid,
                       std::pair<double, double> bracket, double tol, WallScheme wall) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_eigenvalue: tol must be > 0");
  const Shooter shooter(potential, grid, wall);
  return static_cast<double>(shooter.refine(bracket.first, bracket.second, tol));
}

std::vector<std::pair<double, double>> scan_brackets(const Shooter& shooter, int n_levels,
                                                     const NumerovOptions& options) {
  validate(options);
  if (n_levels < 1) throw std::invalid_argument("numerov: n_levels must be >= 1");

  const double base = shooter.minimum();
  const double step = options.scan_step;
  const int workers = options.parallel ? worker_count() : 1;
  constexpr long long kBlock = 1024;

  std::vector<std::pair<double, double>> brackets;
  bool have_previous = false;
  double e_previous = 0.0;
  long double f_previous = 0.0L;

  for (long long start = 1;; start += kBlock) {
    if (base + static_cast<double>(start) * step > options.energy_max) break;
    std::vector<double> energies;
    for (long long i = start; i < start + kBlock; ++i) {
      const double e = base + static_cast<double>(i) * step;
      if (e > options.energy_max) break;
      energies.push_back(e);
    }
    std::vector<long double> values(energies.size());
    auto work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t i = first; i < energies.size(); i += stride)
        values[i] = shooter.mismatch(energies[i]);
    };
    if (workers > 1) {
      std::vector<std::future<void>> jobs;
      for (int w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, work, static_cast<std::size_t>(w),
                                  static_cast<std::size_t>(workers)));
      for (auto& job : jobs) job.get();
    } else {
      work(0, 1);
    }

    for (std::size_t i = 0; i < energies.size(); ++i) {
      const long double f = values[i];
      if (f == 0.0L) {
        brackets.emplace_back(energies[i], energies[i]);
        have_previous = false;
      } else {
        if (have_previous && (f > 0.0L) != (f_previous > 0.0L))
          brackets.emplace_back(e_previous, energies[i]);
        have_previous = true;
        e_previous = energies[i];
        f_previous = f;
      }
      if (static_cast<int>(brackets.size()) == n_levels) return brackets;
    }
  }
  throw SolverError("numerov: found " + std::to_string(brackets.size()) + " of " +
                    std::to_string(n_levels) + " levels below energy " +
                    std::to_string(options.energy_max));
}

EigenSolution numerov_solution(const Shooter& shooter, int level, double energy) {
  auto trajectory = shooter.integrate(energy);
  trajectory.samples.back() = 0.0;  // wall
  if (shooter.wall() == WallScheme::last_interior) trajectory.samples[trajectory.samples.size() - 2] = 0.0;
  EigenSolution sol;
  sol.level = level;
  sol.energy = energy;
  sol.wavefunction = normalize(trajectory.samples, shooter.grid());
  sol.node_count = count_nodes(sol.wavefunction);
  sol.parity = detect_parity(sol.wavefunction);
  sol.method = Method::numerov;
  sol.notes = shooter.wall() == WallScheme::series ? "wall scheme: series" : "wall scheme: last-interior";
  return sol;
}

std::vector<EigenSolution> solve_spectrum(const Potential& potential, const Grid& grid,
                                          int n_levels, const NumerovOptions& options) {
  validate(options);
  const Shooter shooter(potential, grid, options.wall, options.seed);
  const auto brackets = scan_brackets(shooter, n_levels, options);

  auto solve_one = [&](int level) {
    const auto [lo, hi] = brackets[static_cast<std::size_t>(level)];
    const double energy = static_cast<double>(shooter.refine(lo, hi, options.tol));
    return numerov_solution(shooter, level, energy);
  };

  std::vector<EigenSolution> levels;
  if (options.parallel && n_levels > 1) {
    std::vector<std::future<EigenSolution>> jobs;
    for (int level = 0; level < n_levels; ++level)
      jobs.push_back(std::async(std::launch::async, solve_one, level));
    for (auto& job : jobs) levels.push_back(job.get());
  } else {
    for (int level = 0; level < n_levels; ++level) levels.push_back(solve_one(level));
  }

  for (const auto& sol : levels) {
    if (sol.node_count != sol.level)
      throw SolverError("numerov: level " + std::to_string(sol.level) + " has " +
                        std::to_string(sol.node_count) + " nodes; reduce scan_step");
  }
  return levels;
}

}  // namespace cotwell
