#include <catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>

#include "qcarrier/dirac.hpp"
#include "qcarrier/random.hpp"

using namespace qcarrier;
using Catch::Approx;

namespace {

constexpr complex kI{0.0, 1.0};

Eigen::Matrix4cd dense(const DiracOperator& op) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = op(r, c);
  return m;
}

Eigen::Matrix2cd dense2(const TwoLevelOperator& op) {
  Eigen::Matrix2cd m;
  m << op(0, 0), op(0, 1), op(1, 0), op(1, 1);
  return m;
}

// Kronecker product by explicit block assembly.
Eigen::Matrix4cd kron(const TwoLevelOperator& a, const TwoLevelOperator& b) {
  Eigen::Matrix4cd m;
  const auto bd = dense2(b);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m.block<2, 2>(2 * r, 2 * c) = a(r, c) * bd;
  return m;
}

DiracParams random_params(Rng& rng) {
  return {.m = rng.uniform(0.1, 3.0),
          .c = rng.uniform(0.5, 2.0),
          .p = {rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)}};
}

}  // namespace

TEST_CASE("kron layout puts qubit 1 outside", "[dirac]") {
  const auto x = TwoLevelOperator::pauli_x();
  const auto y = TwoLevelOperator::pauli_y();
  const auto op = DiracOperator::kron(x, y);
  CHECK(dense(op).isApprox(kron(x, y), 0.0));
  REQUIRE(op.factors().has_value());
  CHECK(op.factors()->first == x);
  CHECK(op.factors()->second == y);
  CHECK((dense(op) - kron(x, y)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_hamiltonian", "[dirac]") {
  const DiracParams rest{.m = 2.0, .c = 1.5, .p = {0.0, 0.0, 0.0}};
  const double mc2 = 2.0 * 1.5 * 1.5;
  const auto h_rest = build_hamiltonian(rest);
  CHECK(max_entry_deviation(
            h_rest, DiracOperator::kron(mc2 * TwoLevelOperator::pauli_z(),
                                        TwoLevelOperator::identity())) == 0.0);

  const DiracParams params{.m = 1.0, .c = 1.0, .p = {1.0, 2.0, 3.0}};
  const Eigen::Matrix4cd h = dense(build_hamiltonian(params));
  const Eigen::Matrix4cd h2 = h * h;
  CHECK((h2 - 15.0 * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(params.energy() * params.energy() == Approx(15.0));

  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_params(rng);
    const auto hp = build_hamiltonian(p);
    CHECK(std::abs(hp.trace()) == 0.0);
    CHECK(max_entry_deviation(hp, hp.adjoint()) <= 1e-13);
  }
}

TEST_CASE("square_check", "[dirac][property]") {
  CHECK(square_check({.m = 1.3, .c = 0.9, .p = {0.0, 0.0, 0.0}}) == 0.0);
  const DiracParams p{.m = 1.0, .c = 1.0, .p = {3.0, 0.0, 4.0}};
  CHECK(p.energy() * p.energy() == Approx(26.0));
  CHECK(square_check(p) <= 1e-12 * 26.0);

  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = random_params(rng);
    const double e2 = q.energy() * q.energy();
    // Dense product oracle agrees with the library value.
    const Eigen::Matrix4cd h = dense(build_hamiltonian(q));
    const double oracle = (h * h - e2 * Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
    CHECK(square_check(q) <= 1e-12 * e2);
    CHECK(oracle <= 1e-12 * e2);
  }
}

TEST_CASE("spectrum is +/-E_p, each doubly degenerate", "[dirac][property]") {
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(rng);
    const auto s = hamiltonian_spectrum(p);
    const double e = p.energy();
    CHECK(std::abs(s[0] + e) <= 1e-10 * e);
    CHECK(std::abs(s[1] + e) <= 1e-10 * e);
    CHECK(std::abs(s[2] - e) <= 1e-10 * e);
    CHECK(std::abs(s[3] - e) <= 1e-10 * e);
  }
}

TEST_CASE("alpha/beta algebra", "[dirac]") {
  const auto report = verify_alpha_beta_algebra();
  CHECK(report.all_pass());
  CHECK(report.max_deviation() == 0.0);

  const auto a1 = alpha_matrix(1);
  const auto a2 = alpha_matrix(2);
  const auto a3 = alpha_matrix(3);
  CHECK(max_entry_deviation(anticommutator(a1, a2), DiracOperator{}) == 0.0);
  CHECK(exactly_equal(anticommutator(a3, a3), 2.0 * DiracOperator::identity()));
  CHECK(exactly_equal(beta_matrix() * beta_matrix(), DiracOperator::identity()));
  CHECK_THROWS_AS(alpha_matrix(4), std::invalid_argument);
}

TEST_CASE("gamma matrices satisfy the Clifford algebra", "[dirac]") {
  const auto g = gamma_matrices();
  CHECK(exactly_equal(g[0] * g[0], DiracOperator::identity()));
  CHECK(exactly_equal(anticommutator(g[0], g[1]), DiracOperator{}));
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(exactly_equal(g[k] * g[k], -1.0 * DiracOperator::identity()));
  }
  const auto report = verify_clifford_algebra();
  CHECK(report.checks.size() == 10);
  CHECK(report.all_pass());

  // gamma^k = beta alpha_k
  for (int k = 1; k <= 3; ++k) {
    CHECK(exactly_equal(g[static_cast<std::size_t>(k)], beta_matrix() * alpha_matrix(k)));
  }

  // Explicit tensor forms.
  const auto iy = kI * TwoLevelOperator::pauli_y();
  CHECK(dense(g[1]).isApprox(kron(iy, TwoLevelOperator::pauli_x()), 0.0));
  CHECK(dense(g[3]).isApprox(kron(iy, TwoLevelOperator::pauli_z()), 0.0));

  const auto printed = verify_printed_gamma2();
  CHECK_FALSE(printed.all_pass());
  CHECK(exactly_equal(printed_gamma2() * printed_gamma2(), DiracOperator::identity()));
}

TEST_CASE("plane_wave_solution", "[dirac]") {
  Rng rng(54);
  const Qubit up = Qubit::ket(1);

  SECTION("positive energy at rest is |1>|phi>") {
    const DiracParams rest{.m = 1.0, .c = 1.0, .p = {0.0, 0.0, 0.0}};
    const Qubit phi = rng.qubit();
    const auto s = plane_wave_solution(+1, rest, phi, 0.0);
    CHECK(s.components[0] == phi.a);
    CHECK(s.components[1] == phi.b);
    CHECK(s.components[2] == complex{});
    CHECK(s.components[3] == complex{});
    CHECK(eigen_residual(rest, s) <= 1e-15);
  }

  SECTION("boosted along z against a dense eigensolver") {
    const DiracParams p{.m = 1.0, .c = 1.0, .p = {0.0, 0.0, 3.0}};
    const auto s = plane_wave_solution(+1, p, up, 0.0);
    const double e = std::sqrt(10.0);
    CHECK(p.energy() == Approx(e));
    CHECK(eigen_residual(p, s) <= 1e-10);
    // The state lies in the +E_p eigenspace found by Eigen.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(dense(build_hamiltonian(p)));
    const Eigen::Matrix<std::complex<double>, 4, 2> positive = solver.eigenvectors().rightCols<2>();
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v(k) = s.components[static_cast<std::size_t>(k)];
    const Eigen::Vector4cd projected = positive * (positive.adjoint() * v);
    CHECK((projected - v).norm() <= 1e-10);
    CHECK(solver.eigenvalues()(3) == Approx(e).epsilon(1e-12));
  }

  SECTION("negative energy branch is singular at rest") {
    const DiracParams rest{.m = 1.0, .c = 1.0, .p = {0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(plane_wave_solution(-1, rest, up, 0.0), SingularBranch);
  }

  SECTION("both branches are normalized eigenstates") {
    for (int trial = 0; trial < 50; ++trial) {
      const auto params = random_params(rng);
      const Qubit phi = rng.qubit();
      for (int lambda : {+1, -1}) {
        const auto s = plane_wave_solution(lambda, params, phi, rng.uniform(-3, 3));
        CHECK(std::abs(s.norm2() - 1.0) <= 1e-12);
        CHECK(eigen_residual(params, s) <= 1e-10 * params.energy());
      }
    }
  }

  SECTION("time phase") {
    const DiracParams p{.m = 1.0, .c = 1.0, .p = {0.3, -0.2, 0.5}, .h0 = 2.0};
    const auto s0 = plane_wave_solution(-1, p, up, 0.0);
    const auto st = plane_wave_solution(-1, p, up, 1.7);
    const complex phase = std::exp(kI * (1.7 * p.energy() / 2.0));
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(st.components[k] - phase * s0.components[k]) <= 1e-14);
  }

  SECTION("the qubit-1 selector recovers N |1>|phi>") {
    const DiracParams p{.m = 1.0, .c = 1.0, .p = {0.4, 0.1, -0.7}};
    const Qubit phi = rng.qubit();
    const auto s = plane_wave_solution(+1, p, phi, 0.0);
    const auto upper = project_upper(s.components);
    const double n = std::abs(s.components[0]) / std::abs(phi.a);
    CHECK(upper[0] == s.components[0]);
    CHECK(upper[1] == s.components[1]);
    CHECK(upper[2] == complex{});
    CHECK(upper[3] == complex{});
    CHECK(std::abs(upper[1] - n * phi.b) <= 1e-14);
  }

  SECTION("nonrelativistic dominance") {
    const DiracParams p{.m = 1.0, .c = 1.0, .p = {0.0, 0.01, 0.0}};
    const auto s = plane_wave_solution(+1, p, rng.qubit(), 0.0);
    CHECK(lower_block_norm(s) <= 0.01 / 2.0 + 1e-6);
    const double r = 0.01 / (1.0 + p.energy());
    CHECK(lower_block_norm(s) == Approx(r / std::sqrt(1.0 + r * r)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(plane_wave_solution(0, {.m = 1.0}, up, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(plane_wave_solution(1, {.m = 1.0}, Qubit{1.0, 1.0}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("Dirac params validation", "[dirac]") {
  CHECK_THROWS_AS((DiracParams{.m = -1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((DiracParams{.m = 1.0, .c = 0.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((DiracParams{.m = 0.0, .c = 1.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW((DiracParams{.m = 0.0, .c = 1.0, .p = {1.0, 0.0, 0.0}}).validate());
}
