#pragma once

#include <array>
#include <span>

#include "qcarrier/pauli.hpp"

/// Unitary rotation actions U(xi) = cos xi I - i sin xi X, their products, the
/// uniform-register continuum limit, and two-level evolution under a
/// generator G = mu I + nu X.
namespace qcarrier {

struct RotationAction {
  double xi{};

  TwoLevelOperator op() const;
};

/// Coefficients of U_n |x0> = A |x0> + B |x0bar>.
struct SequenceCoefficients {
  complex a{};
  complex b{};
};

/// A = cos(sum xi), B = -i sin(sum xi). The summation is compensated so long
/// sequences of small angles keep full precision.
SequenceCoefficients compose_sequence(std::span<const double> xis);

/// exp(-i phi X) = cos phi I - i sin phi X.
TwoLevelOperator exp_form(double phi);

/// Register value after n uniformly spaced actions: phi_n = n * xi_bar.
inline double uniform_register(long n, double xi_bar) {
  return static_cast<double>(n) * xi_bar;
}

/// Max-entry norm of [U((n+1) xi_bar) - U(n xi_bar)] / xi_bar + i X U(n xi_bar).
///
/// The difference quotient is evaluated in the factored form
/// ((exp(-i xi_bar X) - I) / xi_bar) U(n xi_bar) with cancellation-free
/// coefficients, so the result stays accurate as xi_bar -> 0.
/// Throws std::invalid_argument unless xi_bar > 0.
double finite_difference_residual(long n, double xi_bar);

struct Generator {
  double mu{};
  double nu{};

  TwoLevelOperator op() const;
  /// G_sigma = mu + sigma nu.
  double eigenvalue(int sigma) const;
};

struct EigenPair {
  int sigma;
  double value;
  Qubit state;
};

/// Ordered sigma = +1 then sigma = -1. For nu != 0 the states are
/// (|0> +/- |1>)/sqrt(2); for nu == 0 they are |0> and |1>.
std::array<EigenPair, 2> generator_spectrum(const Generator& g);

/// Components c_sigma of psi along the spectrum returned above.
std::array<complex, 2> eigen_components(const Qubit& psi, const Generator& g);

/// sum_sigma exp(-i G_sigma tau) c_sigma |x_sigma>. The global phase
/// exp(-i mu tau) is kept.
Qubit evolve_two_level(const Qubit& psi0, const Generator& g, double tau);

/// mu + nu (|c_+|^2 - |c_-|^2).
double mean_generator(const Qubit& psi, const Generator& g);

}  // namespace qcarrier
