#include "qcarrier/spinor_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcarrier {
namespace {

double channel_weight(const std::vector<complex>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

void require_compatible(const SpinorField& lhs, const SpinorField& rhs) {
  lhs.validate();
  rhs.validate();
  if (!(lhs.grid == rhs.grid) || lhs.domain != rhs.domain) {
    throw std::invalid_argument("spinor fields live on different grids");
  }
}

}  // namespace

SpatialGrid::SpatialGrid(std::size_t n_points, double q_min, double q_max,
                         double h1)
    : n_(n_points), q_min_(q_min), q_max_(q_max), h1_(h1) {
  if (n_points < 2 || !std::has_single_bit(n_points)) {
    throw std::invalid_argument("grid size must be a power of two >= 2");
  }
  if (!(q_max > q_min) || !std::isfinite(q_min) || !std::isfinite(q_max)) {
    throw std::invalid_argument("grid requires finite q_min < q_max");
  }
  if (!(h1 > 0.0)) {
    throw std::invalid_argument("h1 must be positive");
  }
  dq_ = (q_max - q_min) / static_cast<double>(n_points);
}

double SpatialGrid::dp() const {
  return 2.0 * std::numbers::pi * h1_ / (static_cast<double>(n_) * dq_);
}

double SpatialGrid::momentum_measure() const {
  return 1.0 / (static_cast<double>(n_) * dq_);
}

std::vector<double> SpatialGrid::positions() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = q(j);
  return out;
}

std::vector<double> SpatialGrid::momenta() const {
  std::vector<double> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = p(k);
  return out;
}

SpinorField SpinorField::zeros(const SpatialGrid& grid, Domain domain) {
  return {grid, domain, std::vector<complex>(grid.n_points()),
          std::vector<complex>(grid.n_points())};
}

double SpinorField::measure() const {
  return domain == Domain::position ? grid.dq() : grid.momentum_measure();
}

double SpinorField::norm2() const { return weight_a() + weight_b(); }

double SpinorField::weight_a() const { return channel_weight(a) * measure(); }

double SpinorField::weight_b() const { return channel_weight(b) * measure(); }

void SpinorField::validate() const {
  if (a.size() != grid.n_points() || b.size() != grid.n_points()) {
    throw std::invalid_argument("spinor channel length does not match grid");
  }
}

double l2_distance(const SpinorField& lhs, const SpinorField& rhs) {
  require_compatible(lhs, rhs);
  double s = 0.0;
  for (std::size_t j = 0; j < lhs.a.size(); ++j) {
    s += std::norm(lhs.a[j] - rhs.a[j]) + std::norm(lhs.b[j] - rhs.b[j]);
  }
  return std::sqrt(s * lhs.measure());
}

double max_abs_difference(const SpinorField& lhs, const SpinorField& rhs) {
  require_compatible(lhs, rhs);
  double worst = 0.0;
  for (std::size_t j = 0; j < lhs.a.size(); ++j) {
    worst = std::max({worst, std::abs(lhs.a[j] - rhs.a[j]),
                      std::abs(lhs.b[j] - rhs.b[j])});
  }
  return worst;
}

}  // namespace qcarrier
