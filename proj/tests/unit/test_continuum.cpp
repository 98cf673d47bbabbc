#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qcarrier/continuum.hpp"
#include "qcarrier/random.hpp"

using namespace qcarrier;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

SequenceCoefficients product_oracle(const std::vector<double>& xis) {
  TwoLevelOperator u = TwoLevelOperator::identity();
  for (double xi : xis) {
    const TwoLevelOperator step{std::cos(xi), -kI * std::sin(xi),
                                -kI * std::sin(xi), std::cos(xi)};
    u = oracle::product(step, u);
  }
  const Qubit out = oracle::apply(u, Qubit::ket(1));
  return {out.a, out.b};
}

}  // namespace

TEST_CASE("RotationAction is unitary", "[continuum][property]") {
  Rng rng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    const RotationAction u{rng.uniform(-100.0, 100.0)};
    REQUIRE(unitarity_deviation(u.op()) <= 1e-12);
  }
}

TEST_CASE("compose_sequence", "[continuum]") {
  {
    const std::vector<double> xis{0.0, 0.0, 0.0};
    const auto c = compose_sequence(xis);
    CHECK(c.a == complex{1.0});
    CHECK(std::abs(c.b) == 0.0);
  }
  {
    const std::vector<double> xis{kPi / 4, kPi / 4};
    const auto c = compose_sequence(xis);
    const auto o = product_oracle(xis);
    CHECK(std::abs(c.a - o.a) <= 1e-12);
    CHECK(std::abs(c.b - o.b) <= 1e-12);
    CHECK(std::abs(c.a) <= 1e-15);
    CHECK(std::abs(c.b - complex{0.0, -1.0}) <= 1e-15);
  }
  {
    const std::vector<double> xis{kPi / 3};
    const auto c = compose_sequence(xis);
    CHECK(c.a.real() == Approx(0.5).margin(1e-15));
    CHECK(c.b.imag() == Approx(-std::sqrt(3.0) / 2.0).margin(1e-15));
  }
}

TEST_CASE("compose_sequence matches the matrix product", "[continuum][property]") {
  Rng rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> xis(static_cast<std::size_t>(rng.uniform_int(0, 30)));
    for (auto& xi : xis) xi = rng.uniform(-1.0, 1.0);
    const auto c = compose_sequence(xis);
    const auto o = product_oracle(xis);
    CHECK(std::abs(c.a - o.a) <= 1e-12);
    CHECK(std::abs(c.b - o.b) <= 1e-12);
    CHECK(std::abs(std::norm(c.a) + std::norm(c.b) - 1.0) <= 1e-12);
  }
}

TEST_CASE("exp_form", "[continuum]") {
  CHECK(exp_form(0.0) == TwoLevelOperator::identity());
  const auto x = TwoLevelOperator::pauli_x();
  for (double phi : {kPi / 2, kPi, 0.3, -2.7}) {
    CHECK(max_entry_deviation(exp_form(phi), oracle::exp_minus_i(x, phi)) <= 1e-12);
  }
  CHECK(max_entry_deviation(exp_form(kPi / 2), -kI * x) <= 1e-15);
  CHECK(max_entry_deviation(exp_form(kPi), -1.0 * TwoLevelOperator::identity()) <=
        1e-15);
}

TEST_CASE("exp_form composition law", "[continuum][property]") {
  Rng rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const double p1 = rng.uniform(-10.0, 10.0);
    const double p2 = rng.uniform(-10.0, 10.0);
    REQUIRE(max_entry_deviation(exp_form(p1) * exp_form(p2), exp_form(p1 + p2)) <=
            1e-12);
  }
}

TEST_CASE("uniform register is linear in n", "[continuum][property]") {
  Rng rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const double xi_bar = rng.uniform(1e-4, 0.5);
    const long n = rng.uniform_int(0, 500);
    const long m = rng.uniform_int(0, 500);
    CHECK(max_entry_deviation(
              exp_form(uniform_register(n, xi_bar)) *
                  exp_form(uniform_register(m, xi_bar)),
              exp_form(uniform_register(n + m, xi_bar))) <= 1e-12);
  }
}

TEST_CASE("finite_difference_residual", "[continuum]") {
  // Literal difference quotient, used where cancellation is harmless.
  const auto literal = [](long n, double h) {
    const auto diff = (1.0 / h) * (exp_form(static_cast<double>(n + 1) * h) -
                                   exp_form(static_cast<double>(n) * h));
    const auto res = diff + kI * TwoLevelOperator::pauli_x() *
                                exp_form(static_cast<double>(n) * h);
    double worst = 0.0;
    for (const auto& e : res.entries()) worst = std::max(worst, std::abs(e));
    return worst;
  };
  for (long n : {0L, 1L, 7L, 40L}) {
    for (double h : {0.3, 0.1, 1e-2}) {
      CHECK(finite_difference_residual(n, h) ==
            Approx(literal(n, h)).epsilon(1e-9));
    }
  }

  for (long n : {0L, 3L, 17L}) {
    const double r2 = finite_difference_residual(n, 1e-2);
    const double r3 = finite_difference_residual(n, 1e-3);
    CHECK(r2 / r3 == Approx(10.0).epsilon(0.05));
  }

  CHECK(finite_difference_residual(0, 1e-8) < 1e-8);
  CHECK(finite_difference_residual(123456, 1e-8) < 1e-8);
  CHECK(finite_difference_residual(0, 0.1) <= 0.05);

  CHECK_THROWS_AS(finite_difference_residual(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(finite_difference_residual(1, -1e-3), std::invalid_argument);
}

TEST_CASE("generator_spectrum", "[continuum]") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto s = generator_spectrum({0.0, 1.0});
  CHECK(s[0].sigma == 1);
  CHECK(s[0].value == 1.0);
  CHECK(s[1].value == -1.0);
  CHECK(distance(s[0].state, r * (Qubit::ket(0) + Qubit::ket(1))) <= 1e-15);
  CHECK(distance(s[1].state, r * (Qubit::ket(0) - Qubit::ket(1))) <= 1e-15);

  const auto degenerate = generator_spectrum({2.0, 0.0});
  CHECK(degenerate[0].value == 2.0);
  CHECK(degenerate[1].value == 2.0);
  CHECK(degenerate[0].state == Qubit::ket(0));
  CHECK(degenerate[1].state == Qubit::ket(1));

  const auto s12 = generator_spectrum({1.0, 2.0});
  CHECK(s12[0].value == 3.0);
  CHECK(s12[1].value == -1.0);

  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Generator g{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    for (const auto& pair : generator_spectrum(g)) {
      const Qubit residual = apply(g.op(), pair.state) - pair.value * pair.state;
      CHECK(residual.norm() <= 1e-12);
    }
  }
}

TEST_CASE("evolve_two_level", "[continuum]") {
  Rng rng(9);
  const Qubit psi0 = rng.qubit();
  CHECK(distance(evolve_two_level(psi0, {0.7, 1.3}, 0.0), psi0) <= 1e-15);

  const Qubit flipped = evolve_two_level(Qubit::ket(0), {0.0, 1.0}, kPi / 2);
  CHECK(distance(flipped, -kI * Qubit::ket(1)) <= 1e-15);

  for (double tau : {0.1, 1.0, 17.0}) {
    const Qubit out = evolve_two_level(psi0, {1.0, 0.0}, tau);
    CHECK(distance(out, std::exp(-kI * tau) * psi0) <= 1e-14);
    CHECK(phase_insensitive_distance(out, psi0) <= 1e-7);
  }
}

TEST_CASE("evolve_two_level matches the matrix exponential", "[continuum][property]") {
  Rng rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    const Generator g{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const double tau = rng.uniform(-20, 20);
    const Qubit psi0 = rng.qubit();
    const Qubit got = evolve_two_level(psi0, g, tau);
    CHECK(distance(got, oracle::apply(oracle::exp_minus_i(g.op(), tau), psi0)) <=
          1e-12);
    // factored form exp(-i tau mu) exp_form(nu tau)
    CHECK(distance(got, std::exp(-kI * (g.mu * tau)) *
                            apply(exp_form(g.nu * tau), psi0)) <= 1e-12);
    CHECK(std::abs(got.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("mean_generator", "[continuum]") {
  const double r = 1.0 / std::sqrt(2.0);
  const Qubit plus = r * (Qubit::ket(0) + Qubit::ket(1));
  CHECK(mean_generator(plus, {1.0, 0.5}) == Approx(1.5).margin(1e-15));
  CHECK(mean_generator(Qubit::ket(0), {1.0, 0.5}) == Approx(1.0).margin(1e-15));

  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Generator g{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Qubit psi = rng.qubit();
    const complex quadratic = inner(psi, oracle::apply(g.op(), psi));
    CHECK(std::abs(mean_generator(psi, g) - quadratic.real()) <= 1e-12);
  }
}

TEST_CASE("mean_generator is conserved along trajectories", "[continuum][property]") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Generator g{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Qubit psi0 = rng.qubit();
    const double e0 = mean_generator(psi0, g);
    for (double tau = 0.0; tau <= 100.0; tau += 2.5) {
      REQUIRE(std::abs(mean_generator(evolve_two_level(psi0, g, tau), g) - e0) <=
              1e-11);
    }
  }
}

TEST_CASE("rotation coefficients satisfy both invertibility constraints",
          "[continuum][property]") {
  Rng rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const double xi = rng.uniform(-10, 10);
    const complex alpha = std::cos(xi);
    const complex beta = -kI * std::sin(xi);
    CHECK(std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= 1e-12);
    CHECK(std::abs(alpha * alpha - beta * beta - 1.0) <= 1e-12);
    CHECK(std::abs(std::norm(beta) + beta * beta) <= 1e-12);
  }
}
