#include "qcarrier/action_group.hpp"

#include <cmath>
#include <string>

namespace qcarrier {
namespace {

void require_label(int x) {
  if (x != 0 && x != 1) {
    throw std::invalid_argument("Cbit label must be 0 or 1, got " +
                                std::to_string(x));
  }
}

double inverse_denominator(CircleAction action) {
  const double d = action.alpha * action.alpha - action.beta * action.beta;
  if (std::abs(d) <= kSingularTolerance) {
    throw SingularInverse("alpha I + beta X is not invertible: |alpha^2 - "
                          "beta^2| below singular tolerance");
  }
  return d;
}

}  // namespace

CbitAction::CbitAction(int alpha) : alpha_(alpha) { require_label(alpha); }

TwoLevelOperator CbitAction::op() const {
  return static_cast<double>(alpha_) * TwoLevelOperator::identity() +
         static_cast<double>(alpha_bar()) * TwoLevelOperator::pauli_x();
}

CbitHistory cbit_history(std::initializer_list<int> alphas) {
  return cbit_history(std::vector<int>(alphas));
}

CbitHistory cbit_history(const std::vector<int>& alphas) {
  std::vector<CbitAction> params;
  params.reserve(alphas.size());
  for (int a : alphas) params.emplace_back(a);
  return CbitHistory(std::move(params));
}

int cbit_apply(CbitAction action, int x) {
  require_label(x);
  const int x_bar = 1 - x;
  return action.alpha() * x + action.alpha_bar() * x_bar;
}

CbitAction cbit_compose(CbitAction a2, CbitAction a1) {
  return CbitAction(a2.alpha() * a1.alpha() + a2.alpha_bar() * a1.alpha_bar());
}

HistoryRun run_history(const CbitHistory& history, int x0) {
  require_label(x0);
  HistoryRun run{x0, {}};
  run.intermediates.reserve(history.size());
  for (const auto& action : history.params()) {
    run.final_state = cbit_apply(action, run.final_state);
    run.intermediates.push_back(run.final_state);
  }
  return run;
}

bool CircleAction::on_unit_circle(double tol) const {
  return std::abs(alpha * alpha + beta * beta - 1.0) <= tol;
}

TwoLevelOperator CircleAction::op() const {
  return {alpha, beta, beta, alpha};
}

CircleComposition circle_compose_defect(CircleAction a2, CircleAction a1) {
  if (!a2.on_unit_circle() || !a1.on_unit_circle()) {
    throw std::invalid_argument("circle_compose_defect: inputs must satisfy "
                                "alpha^2 + beta^2 = 1");
  }
  const auto coeffs = pauli_decompose(a2.op() * a1.op());
  const CircleAction product{coeffs.i.real(), coeffs.x.real()};
  return {product,
          product.alpha * product.alpha + product.beta * product.beta};
}

double predicted_circle_defect(CircleAction a2, CircleAction a1) {
  return 1.0 + 4.0 * a2.alpha * a1.alpha * a2.beta * a1.beta;
}

CircleAction circle_inverse(CircleAction action) {
  const double d = inverse_denominator(action);
  return {action.alpha / d, -action.beta / d};
}

double circle_inverse_norm(CircleAction action) {
  return 1.0 / std::abs(inverse_denominator(action));
}

}  // namespace qcarrier
