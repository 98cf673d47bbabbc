#include "qcarrier/continuum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcarrier {
namespace {

constexpr complex kI{0.0, 1.0};

// Kahan-Babuska summation.
double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace

TwoLevelOperator RotationAction::op() const { return exp_form(xi); }

SequenceCoefficients compose_sequence(std::span<const double> xis) {
  const double phi = compensated_sum(xis);
  return {std::cos(phi), -kI * std::sin(phi)};
}

TwoLevelOperator exp_form(double phi) {
  const complex c = std::cos(phi);
  const complex s = -kI * std::sin(phi);
  return {c, s, s, c};
}

double finite_difference_residual(long n, double xi_bar) {
  if (!(xi_bar > 0.0)) {
    throw std::invalid_argument("finite_difference_residual: xi_bar must be > 0");
  }
  // (exp(-i h X) - I)/h + i X = c_i I + c_x X with
  //   c_i = (cos h - 1)/h = -2 sin^2(h/2)/h
  //   c_x = i (1 - sin h / h)
  const double h = xi_bar;
  const double half_sin = std::sin(0.5 * h);
  const double c_i = -2.0 * half_sin * half_sin / h;
  double one_minus_sinc;
  if (h < 1e-3) {
    const double h2 = h * h;
    one_minus_sinc = h2 / 6.0 * (1.0 - h2 / 20.0 * (1.0 - h2 / 42.0));
  } else {
    one_minus_sinc = 1.0 - std::sin(h) / h;
  }
  const TwoLevelOperator defect{c_i, kI * one_minus_sinc, kI * one_minus_sinc,
                                c_i};
  const auto residual = defect * exp_form(uniform_register(n, xi_bar));
  double worst = 0.0;
  for (const auto& e : residual.entries()) worst = std::max(worst, std::abs(e));
  return worst;
}

TwoLevelOperator Generator::op() const { return {mu, nu, nu, mu}; }

double Generator::eigenvalue(int sigma) const {
  return mu + static_cast<double>(sigma) * nu;
}

std::array<EigenPair, 2> generator_spectrum(const Generator& g) {
  if (g.nu == 0.0) {
    return {EigenPair{+1, g.mu, Qubit::ket(0)},
            EigenPair{-1, g.mu, Qubit::ket(1)}};
  }
  const double r = 1.0 / std::numbers::sqrt2;
  const Qubit zero = Qubit::ket(0);
  const Qubit one = Qubit::ket(1);
  return {EigenPair{+1, g.eigenvalue(+1), r * (zero + one)},
          EigenPair{-1, g.eigenvalue(-1), r * (zero - one)}};
}

std::array<complex, 2> eigen_components(const Qubit& psi, const Generator& g) {
  const auto spectrum = generator_spectrum(g);
  return {inner(spectrum[0].state, psi), inner(spectrum[1].state, psi)};
}

Qubit evolve_two_level(const Qubit& psi0, const Generator& g, double tau) {
  const auto spectrum = generator_spectrum(g);
  const auto c = eigen_components(psi0, g);
  Qubit out{};
  for (std::size_t k = 0; k < 2; ++k) {
    const complex phase = std::exp(-kI * (spectrum[k].value * tau));
    out = out + (phase * c[k]) * spectrum[k].state;
  }
  return out;
}

double mean_generator(const Qubit& psi, const Generator& g) {
  const auto c = eigen_components(psi, g);
  return g.mu + g.nu * (std::norm(c[0]) - std::norm(c[1]));
}

}  // namespace qcarrier
