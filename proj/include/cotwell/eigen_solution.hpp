#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cotwell {

class Grid;

/// Raised when a solver cannot deliver the requested state.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { numerov, wkb, spt, analytic };
enum class Parity { even, odd };

std::string_view to_string(Method method);
std::string_view to_string(Parity parity);
/// Throws std::invalid_argument on an unknown name.
Method parse_method(std::string_view name);

/// One bound state sampled on a Grid.
struct EigenSolution {
  int level = 0;
  double energy = 0.0;
  std::vector<double> wavefunction;
  int node_count = 0;
  Parity parity = Parity::even;
  Method method = Method::numerov;
  /// Free-form remarks about how the samples were produced.
  std::string notes;
};

/// Scales samples so the composite Simpson L2 norm on `grid` is one, with the
/// first nonzero sample positive. Throws std::invalid_argument for a zero
/// function or a size mismatch.
std::vector<double> normalize(std::span<const double> samples, const Grid& grid);

/// Strict sign changes between consecutive nonzero samples.
int count_nodes(std::span<const double> samples);

/// Compares mirror pairs psi(x_k), psi(x_{N-k}).
Parity detect_parity(std::span<const double> samples);

/// Largest |psi(x) - s psi(-x)| / max|psi| with s = +1 (even) or -1 (odd).
double parity_defect(std::span<const double> samples, Parity parity);

/// Simpson integral of |psi|^2.
double norm_squared(std::span<const double> samples, const Grid& grid);

/// `x,psi,psi_sq`
void write_wavefunction_csv(std::ostream& out, const Grid& grid,
                            const EigenSolution& solution);

}  // namespace cotwell
