#pragma once

#include <array>
#include <complex>

namespace qcarrier {

using complex = std::complex<double>;

/// Absolute tolerance on the max-entry deviation used by the structural
/// predicates (is_unitary, is_self_adjoint, Qubit::is_normalized).
inline constexpr double kStructuralTolerance = 1e-12;

/// Two-component amplitude vector over the Cbit basis.
///
/// Column layout follows the Cbit map 1 -> (1,0)^T, 0 -> (0,1)^T. The first
/// component `a` is the amplitude of the reference Cbit |x0> = |1>, the second
/// component `b` the amplitude of its complement |x0bar> = |0>.
struct Qubit {
  complex a{};
  complex b{};

  /// Column vector of the Cbit with label 0 or 1. Throws std::invalid_argument
  /// for any other label.
  static Qubit ket(int label);

  double norm2() const { return std::norm(a) + std::norm(b); }
  double norm() const;
  bool is_normalized(double tol = kStructuralTolerance) const;
  /// True only for the exact columns (1,0) and (0,1).
  bool is_cbit() const;
  Qubit normalized() const;

  friend bool operator==(const Qubit&, const Qubit&) = default;
};

Qubit operator+(const Qubit& lhs, const Qubit& rhs);
Qubit operator-(const Qubit& lhs, const Qubit& rhs);
Qubit operator*(complex s, const Qubit& q);

/// <lhs|rhs>, antilinear in the first argument.
complex inner(const Qubit& lhs, const Qubit& rhs);

/// ||lhs - rhs||, sensitive to global phase.
double distance(const Qubit& lhs, const Qubit& rhs);

/// min over theta of || lhs - e^{i theta} rhs ||.
double phase_insensitive_distance(const Qubit& lhs, const Qubit& rhs);

/// Pauli-basis coefficients of a 2x2 operator, M = i*I + x*X + y*Y + z*Z.
struct PauliCoefficients {
  complex i{};
  complex x{};
  complex y{};
  complex z{};
};

/// Complex 2x2 matrix, row-major.
class TwoLevelOperator {
 public:
  constexpr TwoLevelOperator() = default;
  constexpr TwoLevelOperator(complex m00, complex m01, complex m10,
                             complex m11)
      : entries_{m00, m01, m10, m11} {}

  static constexpr TwoLevelOperator identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr TwoLevelOperator pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr TwoLevelOperator pauli_y() {
    return {0.0, complex{0.0, -1.0}, complex{0.0, 1.0}, 0.0};
  }
  static constexpr TwoLevelOperator pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
  static constexpr TwoLevelOperator zero() { return {}; }

  constexpr complex operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(2 * row + col)];
  }
  constexpr complex& operator()(int row, int col) {
    return entries_[static_cast<std::size_t>(2 * row + col)];
  }
  constexpr const std::array<complex, 4>& entries() const { return entries_; }

  TwoLevelOperator adjoint() const;
  complex trace() const { return entries_[0] + entries_[3]; }

  TwoLevelOperator& operator+=(const TwoLevelOperator& rhs);
  TwoLevelOperator& operator-=(const TwoLevelOperator& rhs);
  TwoLevelOperator& operator*=(complex s);

  friend bool operator==(const TwoLevelOperator&,
                         const TwoLevelOperator&) = default;

 private:
  std::array<complex, 4> entries_{};
};

TwoLevelOperator operator+(TwoLevelOperator lhs, const TwoLevelOperator& rhs);
TwoLevelOperator operator-(TwoLevelOperator lhs, const TwoLevelOperator& rhs);
TwoLevelOperator operator*(complex s, TwoLevelOperator op);
/// Matrix product; rhs acts first.
TwoLevelOperator operator*(const TwoLevelOperator& lhs,
                           const TwoLevelOperator& rhs);

Qubit apply(const TwoLevelOperator& op, const Qubit& q);

/// op2 * op1: op1 acts first.
TwoLevelOperator compose(const TwoLevelOperator& op2,
                         const TwoLevelOperator& op1);

/// c_P = tr(P M) / 2 for P in {I, X, Y, Z}.
PauliCoefficients pauli_decompose(const TwoLevelOperator& op);
TwoLevelOperator pauli_reconstruct(const PauliCoefficients& c);

/// max |lhs_ij - rhs_ij|
double max_entry_deviation(const TwoLevelOperator& lhs,
                           const TwoLevelOperator& rhs);
/// max |(U^dagger U - I)_ij|
double unitarity_deviation(const TwoLevelOperator& op);

bool is_unitary(const TwoLevelOperator& op, double tol = kStructuralTolerance);
bool is_self_adjoint(const TwoLevelOperator& op,
                     double tol = kStructuralTolerance);

}  // namespace qcarrier
