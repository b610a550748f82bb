#pragma once

#include <cstddef>
#include <vector>

namespace cotwell {

/// Uniform discretization of [-pi, pi]: x_k = -pi + h k, k = 0..N, h = 2 pi / N.
///
/// N must be even so x = 0 is a node and mirror pairs (k, N - k) are exact
/// negatives of each other.
class Grid {
 public:
  explicit Grid(int n_intervals);

  int intervals() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  double step() const { return h_; }
  long double step_ld() const;

  double node(std::size_t k) const { return nodes_[k]; }
  long double node_ld(std::size_t k) const;
  const std::vector<double>& nodes() const { return nodes_; }
  std::size_t center() const { return static_cast<std::size_t>(n_ / 2); }

 private:
  int n_;
  double h_;
  std::vector<double> nodes_;
};

}  // namespace cotwell
