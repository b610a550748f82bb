#include "cotwell/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace cotwell {

Grid::Grid(int n_intervals) : n_(n_intervals) {
  if (n_intervals < 2 || n_intervals % 2 != 0)
    throw std::invalid_argument("grid: interval count must be even and >= 2, got " +
                                std::to_string(n_intervals));
  h_ = 2.0 * std::numbers::pi / n_;
  nodes_.resize(static_cast<std::size_t>(n_) + 1);
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    nodes_[k] = static_cast<double>(node_ld(k));
}

long double Grid::step_ld() const { return 2.0L * std::numbers::pi_v<long double> / n_; }

long double Grid::node_ld(std::size_t k) const {
  // pi (2k - N) / N keeps the endpoints at exactly +-pi and the grid symmetric.
  const long double ratio =
      static_cast<long double>(2 * static_cast<long long>(k) - n_) / n_;
  return std::numbers::pi_v<long double> * ratio;
}

}  // namespace cotwell
