#include "qcarrier/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcarrier {

Qubit Qubit::ket(int label) {
  switch (label) {
    case 1:
      return {1.0, 0.0};
    case 0:
      return {0.0, 1.0};
    default:
      throw std::invalid_argument("Cbit label must be 0 or 1, got " +
                                  std::to_string(label));
  }
}

double Qubit::norm() const { return std::sqrt(norm2()); }

bool Qubit::is_normalized(double tol) const {
  return std::abs(norm2() - 1.0) <= tol;
}

bool Qubit::is_cbit() const {
  return (a == complex{1.0} && b == complex{0.0}) ||
         (a == complex{0.0} && b == complex{1.0});
}

Qubit Qubit::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("cannot normalize the zero qubit");
  }
  return {a / n, b / n};
}

Qubit operator+(const Qubit& lhs, const Qubit& rhs) {
  return {lhs.a + rhs.a, lhs.b + rhs.b};
}

Qubit operator-(const Qubit& lhs, const Qubit& rhs) {
  return {lhs.a - rhs.a, lhs.b - rhs.b};
}

Qubit operator*(complex s, const Qubit& q) { return {s * q.a, s * q.b}; }

complex inner(const Qubit& lhs, const Qubit& rhs) {
  return std::conj(lhs.a) * rhs.a + std::conj(lhs.b) * rhs.b;
}

double distance(const Qubit& lhs, const Qubit& rhs) {
  return (lhs - rhs).norm();
}

double phase_insensitive_distance(const Qubit& lhs, const Qubit& rhs) {
  const double d2 =
      lhs.norm2() + rhs.norm2() - 2.0 * std::abs(inner(lhs, rhs));
  return std::sqrt(std::max(d2, 0.0));
}

TwoLevelOperator TwoLevelOperator::adjoint() const {
  return {std::conj(entries_[0]), std::conj(entries_[2]),
          std::conj(entries_[1]), std::conj(entries_[3])};
}

TwoLevelOperator& TwoLevelOperator::operator+=(const TwoLevelOperator& rhs) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

TwoLevelOperator& TwoLevelOperator::operator-=(const TwoLevelOperator& rhs) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

TwoLevelOperator& TwoLevelOperator::operator*=(complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

TwoLevelOperator operator+(TwoLevelOperator lhs, const TwoLevelOperator& rhs) {
  return lhs += rhs;
}

TwoLevelOperator operator-(TwoLevelOperator lhs, const TwoLevelOperator& rhs) {
  return lhs -= rhs;
}

TwoLevelOperator operator*(complex s, TwoLevelOperator op) { return op *= s; }

TwoLevelOperator operator*(const TwoLevelOperator& lhs,
                           const TwoLevelOperator& rhs) {
  TwoLevelOperator out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
    }
  }
  return out;
}

Qubit apply(const TwoLevelOperator& op, const Qubit& q) {
  return {op(0, 0) * q.a + op(0, 1) * q.b, op(1, 0) * q.a + op(1, 1) * q.b};
}

TwoLevelOperator compose(const TwoLevelOperator& op2,
                         const TwoLevelOperator& op1) {
  return op2 * op1;
}

PauliCoefficients pauli_decompose(const TwoLevelOperator& op) {
  // Closed forms of tr(P M)/2.
  const complex i_unit{0.0, 1.0};
  return {
      0.5 * (op(0, 0) + op(1, 1)),
      0.5 * (op(0, 1) + op(1, 0)),
      0.5 * i_unit * (op(0, 1) - op(1, 0)),
      0.5 * (op(0, 0) - op(1, 1)),
  };
}

TwoLevelOperator pauli_reconstruct(const PauliCoefficients& c) {
  const complex i_unit{0.0, 1.0};
  return {c.i + c.z, c.x - i_unit * c.y, c.x + i_unit * c.y, c.i - c.z};
}

double max_entry_deviation(const TwoLevelOperator& lhs,
                           const TwoLevelOperator& rhs) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    worst = std::max(worst, std::abs(lhs.entries()[k] - rhs.entries()[k]));
  }
  return worst;
}

double unitarity_deviation(const TwoLevelOperator& op) {
  return max_entry_deviation(op.adjoint() * op, TwoLevelOperator::identity());
}

bool is_unitary(const TwoLevelOperator& op, double tol) {
  return unitarity_deviation(op) <= tol;
}

bool is_self_adjoint(const TwoLevelOperator& op, double tol) {
  return max_entry_deviation(op, op.adjoint()) <= tol;
}

}  // namespace qcarrier
