#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcarrier/pauli.hpp"

/// Dirac Hamiltonian and gamma matrices as tensor products of two-level
/// operators, qubit 1 being the outer Kronecker factor:
///
///   H_D = Z1 (x) (m c^2 I2) + X1 (x) (c p . sigma_2)
///   alpha_k = X1 (x) sigma_k,  beta = Z1 (x) I2,  beta^2 = I4
///   gamma^0 = Z1 (x) I2,  gamma^k = i Y1 (x) sigma_k
///
/// The commonly printed gamma^2 = -Y1 (x) Y2 squares to +I4 and so violates
/// the Clifford relation; verify_clifford_algebra() reports that form
/// separately and uses i Y1 (x) Y2.
namespace qcarrier {

/// Raised when the negative-energy plane wave is requested where
/// m c^2 + lambda E_p vanishes (the rest frame).
class SingularBranch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using DiracVector = std::array<complex, 4>;

/// Complex 4x4 matrix in the |qubit1> (x) |qubit2> basis, row-major.
class DiracOperator {
 public:
  using Factors = std::pair<TwoLevelOperator, TwoLevelOperator>;

  DiracOperator() = default;
  explicit DiracOperator(const std::array<complex, 16>& entries)
      : entries_(entries) {}

  /// outer (x) inner, recording the factorization.
  static DiracOperator kron(const TwoLevelOperator& outer,
                            const TwoLevelOperator& inner);
  static DiracOperator identity();

  complex operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(4 * row + col)];
  }
  const std::array<complex, 16>& entries() const { return entries_; }
  /// Present when the operator was built as, or kept the form of, A (x) B.
  const std::optional<Factors>& factors() const { return factors_; }

  DiracOperator adjoint() const;
  complex trace() const;

 private:
  std::array<complex, 16> entries_{};
  std::optional<Factors> factors_;
};

DiracOperator operator+(const DiracOperator& lhs, const DiracOperator& rhs);
DiracOperator operator-(const DiracOperator& lhs, const DiracOperator& rhs);
DiracOperator operator*(complex s, const DiracOperator& op);
DiracOperator operator*(const DiracOperator& lhs, const DiracOperator& rhs);
DiracVector apply(const DiracOperator& op, const DiracVector& v);

DiracOperator anticommutator(const DiracOperator& lhs, const DiracOperator& rhs);
double max_entry_deviation(const DiracOperator& lhs, const DiracOperator& rhs);
bool exactly_equal(const DiracOperator& lhs, const DiracOperator& rhs);

struct DiracParams {
  double m = 1.0;
  double c = 1.0;
  std::array<double, 3> p{};
  /// Action constant dividing the time phase exp(-i lambda t E_p / h0).
  double h0 = 1.0;

  /// sqrt(m^2 c^4 + c^2 |p|^2)
  double energy() const;
  /// Throws std::invalid_argument unless m >= 0, c > 0, h0 > 0 and E_p > 0.
  void validate() const;
};

/// alpha_k for k = 1, 2, 3.
DiracOperator alpha_matrix(int k);
DiracOperator beta_matrix();

DiracOperator build_hamiltonian(const DiracParams& params);

/// || H_D^2 - E_p^2 I4 ||_max
double square_check(const DiracParams& params);

/// Ascending eigenvalues of H_D from dense Hermitian diagonalization.
std::array<double, 4> hamiltonian_spectrum(const DiracParams& params);

struct DiracState {
  DiracVector components{};
  int lambda = +1;

  double norm2() const;
};

/// N e^{-i lambda t E_p/h0} [ |1>_1 |phi>_2 + |0>_1 (c p.sigma/(m c^2 + lambda E_p)) |phi>_2 ]
/// with N chosen for unit norm. Throws std::invalid_argument if lambda is not
/// +/-1 or phi is not normalized, and SingularBranch when
/// |m c^2 + lambda E_p| <= 1e-10 E_p.
DiracState plane_wave_solution(int lambda, const DiracParams& params,
                               const Qubit& phi, double t);

/// || H_D psi - lambda E_p psi ||_2
double eigen_residual(const DiracParams& params, const DiracState& state);

/// Norm of the |0>_1 block (the relativistic complement) of a state.
double lower_block_norm(const DiracState& state);
/// (|1><1|)_1 (x) I2 applied to a state.
DiracVector project_upper(const DiracVector& v);

/// {gamma^0, gamma^1, gamma^2, gamma^3}.
std::array<DiracOperator, 4> gamma_matrices();
/// -Y1 (x) Y2, kept for the report.
DiracOperator printed_gamma2();

struct RelationCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct AlgebraReport {
  std::vector<RelationCheck> checks;

  double max_deviation() const;
  bool all_pass() const;
};

/// {alpha_k, alpha_l} = 2 delta_kl I4, {alpha_k, beta} = 0, beta^2 = I4,
/// plus hermiticity of every alpha_k and beta.
AlgebraReport verify_alpha_beta_algebra();

/// All 10 anticommutators {gamma^mu, gamma^nu} = 2 eta^{mu nu} I4, eta =
/// diag(+,-,-,-), checked with exact equality (tolerance 0).
AlgebraReport verify_clifford_algebra();

/// The Clifford checks that involve the printed -Y1 (x) Y2 in place of
/// gamma^2; expected to fail on the (2,2) relation.
AlgebraReport verify_printed_gamma2();

}  // namespace qcarrier
