#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "qcarrier/action_group.hpp"
#include "qcarrier/random.hpp"

using namespace qcarrier;
using Catch::Approx;

namespace {

std::vector<int> random_labels(Rng& rng, int max_length) {
  std::vector<int> labels(static_cast<std::size_t>(rng.uniform_int(0, max_length)));
  for (auto& x : labels) x = rng.bit();
  return labels;
}

CircleAction random_circle_action(Rng& rng) {
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(theta), std::sin(theta)};
}

// Label of the Cbit column a matrix produces, by direct matrix-vector product.
int label_of(const Qubit& q) {
  REQUIRE(q.is_cbit());
  return q == Qubit::ket(1) ? 1 : 0;
}

}  // namespace

TEST_CASE("CbitAction operators", "[action_group]") {
  CHECK(CbitAction(1).op() == TwoLevelOperator::identity());
  CHECK(CbitAction(0).op() == TwoLevelOperator::pauli_x());
  CHECK_THROWS_AS(CbitAction(2), std::invalid_argument);
  CHECK_THROWS_AS(CbitAction(-1), std::invalid_argument);
  for (int a : {0, 1}) {
    const auto op = CbitAction(a).op();
    CHECK(op * op == TwoLevelOperator::identity());
    CHECK(is_unitary(op, 0.0));
  }
}

TEST_CASE("cbit_apply", "[action_group]") {
  CHECK(cbit_apply(CbitAction(1), 0) == 0);
  CHECK(cbit_apply(CbitAction(0), 0) == 1);
  CHECK(cbit_apply(CbitAction(0), 1) == 0);
  CHECK(cbit_apply(CbitAction(1), 1) == 1);
  CHECK_THROWS_AS(cbit_apply(CbitAction(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(cbit_apply(CbitAction(0), -1), std::invalid_argument);

  // Label arithmetic agrees with the matrix acting on the Cbit column.
  for (int a : {0, 1})
    for (int x : {0, 1})
      CHECK(cbit_apply(CbitAction(a), x) ==
            label_of(oracle::apply(CbitAction(a).op(), Qubit::ket(x))));
}

TEST_CASE("cbit_compose Cayley table", "[action_group]") {
  CHECK(cbit_compose(CbitAction(1), CbitAction(1)) == CbitAction(1));
  CHECK(cbit_compose(CbitAction(0), CbitAction(0)) == CbitAction(1));
  CHECK(cbit_compose(CbitAction(0), CbitAction(1)) == CbitAction(0));
  CHECK(cbit_compose(CbitAction(1), CbitAction(0)) == CbitAction(0));

  for (int a2 : {0, 1}) {
    for (int a1 : {0, 1}) {
      const auto product = oracle::product(CbitAction(a2).op(), CbitAction(a1).op());
      CHECK(cbit_compose(CbitAction(a2), CbitAction(a1)).op() == product);
      for (int a3 : {0, 1}) {
        const CbitAction x3(a3), x2(a2), x1(a1);
        CHECK(cbit_compose(cbit_compose(x3, x2), x1) ==
              cbit_compose(x3, cbit_compose(x2, x1)));
      }
    }
  }
}

TEST_CASE("run_history", "[action_group]") {
  const auto run = run_history(cbit_history({0, 0}), 0);
  CHECK(run.final_state == 0);
  CHECK(run.intermediates == std::vector<int>{1, 0});

  const auto empty = run_history(CbitHistory{}, 1);
  CHECK(empty.final_state == 1);
  CHECK(empty.intermediates.empty());

  for (int x : {0, 1}) CHECK(run_history(cbit_history({0}), x).final_state == 1 - x);

  CHECK_THROWS_AS(run_history(cbit_history({1}), 3), std::invalid_argument);
}

TEST_CASE("reverse_history", "[action_group]") {
  CHECK(reverse_history(cbit_history({0, 1, 0})) == cbit_history({0, 1, 0}));
  CHECK(reverse_history(cbit_history({0, 0, 1})) == cbit_history({1, 0, 0}));

  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = cbit_history(random_labels(rng, 20));
    CHECK(reverse_history(reverse_history(h)) == h);
    for (int x0 : {0, 1}) {
      const auto forward = run_history(h, x0);
      CHECK(run_history(reverse_history(h), forward.final_state).final_state == x0);
      CHECK(forward.intermediates.size() == h.size());
    }
  }
}

TEST_CASE("history composition law", "[action_group][property]") {
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto h1 = cbit_history(random_labels(rng, 20));
    const auto h2 = cbit_history(random_labels(rng, 20));
    const int x0 = rng.bit();
    const int staged = run_history(h2, run_history(h1, x0).final_state).final_state;
    CHECK(run_history(h1.then(h2), x0).final_state == staged);
  }
}

TEST_CASE("circle_compose_defect", "[action_group]") {
  const double r = 1.0 / std::sqrt(2.0);
  const CircleAction diag{r, r};
  const auto both = circle_compose_defect(diag, diag);
  CHECK(both.defect == Approx(2.0).margin(1e-12));
  // matrix-product oracle
  const auto m = oracle::product(diag.op(), diag.op());
  CHECK(both.product.alpha == Approx(m(0, 0).real()).margin(1e-15));
  CHECK(both.product.beta == Approx(m(0, 1).real()).margin(1e-15));

  const CircleAction id{1.0, 0.0};
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(circle_compose_defect(id, random_circle_action(rng)).defect ==
          Approx(1.0).margin(1e-12));
  }
  const CircleAction x{0.0, 1.0};
  CHECK(circle_compose_defect(x, x).defect == 1.0);
  CHECK(circle_compose_defect(x, x).product.alpha == 1.0);

  CHECK_THROWS_AS(circle_compose_defect({0.5, 0.5}, id), std::invalid_argument);
}

TEST_CASE("circle defect closed form", "[action_group][property]") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a2 = random_circle_action(rng);
    const auto a1 = random_circle_action(rng);
    const auto comp = circle_compose_defect(a2, a1);
    CHECK(std::abs(comp.defect - predicted_circle_defect(a2, a1)) <= 1e-12);
  }
}

TEST_CASE("circle actions: self-adjoint, not unitary, forward norm 1",
          "[action_group][property]") {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_circle_action(rng);
    const auto op = a.op();
    CHECK(op == op.adjoint());
    if (std::abs(a.alpha * a.beta) > 1e-3) {
      CHECK(unitarity_deviation(op) > 1e-6);
    }
    for (int x : {0, 1}) {
      CHECK(std::abs(apply(op, Qubit::ket(x)).norm() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("circle_inverse", "[action_group]") {
  const auto id = circle_inverse({1.0, 0.0});
  CHECK(id.alpha == 1.0);
  CHECK(id.beta == 0.0);

  const CircleAction a{std::sqrt(3.0) / 2.0, 0.5};
  const auto inv = circle_inverse(a);
  // 2x2 inverse oracle
  const Eigen::Matrix2cd dense_inv = oracle::dense(a.op()).inverse();
  CHECK(inv.alpha == Approx(dense_inv(0, 0).real()).epsilon(1e-14));
  CHECK(inv.beta == Approx(dense_inv(0, 1).real()).epsilon(1e-14));
  CHECK(inv.alpha == Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(inv.beta == Approx(-1.0).epsilon(1e-14));

  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(circle_inverse({r, r}), SingularInverse);
  CHECK_THROWS_AS(circle_inverse({r, -r}), SingularInverse);
  CHECK_THROWS_AS(circle_inverse_norm({r, r}), SingularInverse);
}

TEST_CASE("circle inverse composes to the identity", "[action_group][property]") {
  Rng rng(29);
  int checked = 0;
  while (checked < 1000) {
    const auto a = random_circle_action(rng);
    const double d = a.alpha * a.alpha - a.beta * a.beta;
    if (std::abs(d) <= 1e-3) continue;
    const auto inv = circle_inverse(a);
    CHECK(max_entry_deviation(inv.op() * a.op(), TwoLevelOperator::identity()) <=
          1e-10);
    CHECK(std::abs(inv.alpha * inv.alpha + inv.beta * inv.beta - 1.0 / (d * d)) <=
          1e-10 * std::max(1.0, 1.0 / (d * d)));
    ++checked;
  }
}

TEST_CASE("circle_inverse_norm", "[action_group]") {
  CHECK(circle_inverse_norm({1.0, 0.0}) == 1.0);
  CHECK(circle_inverse_norm({std::sqrt(3.0) / 2.0, 0.5}) ==
        Approx(2.0).epsilon(1e-14));

  // apply-inverse-and-measure oracle
  const CircleAction a{0.8, 0.6};
  const Eigen::Matrix2cd inv = oracle::dense(a.op()).inverse();
  for (int x : {0, 1}) {
    const auto q = Qubit::ket(x);
    const Eigen::Vector2cd v = inv * Eigen::Vector2cd(q.a, q.b);
    CHECK(std::abs(circle_inverse_norm(a) - v.norm()) <= 1e-10);
  }
  CHECK(circle_inverse_norm(a) == Approx(1.0 / 0.28).epsilon(1e-13));
}
