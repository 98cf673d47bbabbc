#pragma once

#include <cstddef>
#include <vector>

#include "qcarrier/pauli.hpp"

namespace qcarrier {

/// Uniform periodic grid on [q_min, q_max) with n_points nodes and its
/// conjugate momentum lattice.
///
/// dq = (q_max - q_min) / n_points. Momentum nodes are stored in centered,
/// ascending order: p_k = 2 pi h1 (k - n/2) / (n dq), k = 0 .. n-1.
class SpatialGrid {
 public:
  /// Throws std::invalid_argument unless n_points is a power of two >= 2,
  /// q_max > q_min and h1 > 0.
  SpatialGrid(std::size_t n_points, double q_min, double q_max,
              double h1 = 1.0);

  std::size_t n_points() const { return n_; }
  double q_min() const { return q_min_; }
  double q_max() const { return q_max_; }
  double h1() const { return h1_; }
  double dq() const { return dq_; }
  double length() const { return q_max_ - q_min_; }

  double q(std::size_t j) const { return q_min_ + static_cast<double>(j) * dq_; }
  /// k - n/2
  long wavenumber(std::size_t k) const {
    return static_cast<long>(k) - static_cast<long>(n_ / 2);
  }
  double dp() const;
  double p(std::size_t k) const { return static_cast<double>(wavenumber(k)) * dp(); }
  /// dp / (2 pi h1), the weight of one momentum node in the inverse transform.
  double momentum_measure() const;

  std::vector<double> positions() const;
  std::vector<double> momenta() const;

  friend bool operator==(const SpatialGrid&, const SpatialGrid&) = default;

 private:
  std::size_t n_;
  double q_min_;
  double q_max_;
  double h1_;
  double dq_;
};

enum class Domain { position, momentum };

/// Two amplitude arrays a(q), b(q) for the Cbit channels |x0>, |x0bar>, either
/// sampled on the grid nodes (position) or on the momentum lattice.
struct SpinorField {
  SpatialGrid grid;
  Domain domain = Domain::position;
  std::vector<complex> a;
  std::vector<complex> b;

  static SpinorField zeros(const SpatialGrid& grid,
                           Domain domain = Domain::position);

  /// dq in position space, dp/(2 pi h1) in momentum space.
  double measure() const;
  double norm2() const;
  double weight_a() const;
  double weight_b() const;

  /// Throws std::invalid_argument when channel lengths disagree with the grid.
  void validate() const;
};

/// sqrt(sum (|da|^2 + |db|^2) * measure). Throws std::invalid_argument if the
/// grids or domains differ.
double l2_distance(const SpinorField& lhs, const SpinorField& rhs);

/// max over nodes of max(|da|, |db|).
double max_abs_difference(const SpinorField& lhs, const SpinorField& rhs);

}  // namespace qcarrier
