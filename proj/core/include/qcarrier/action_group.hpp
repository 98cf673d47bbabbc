#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "qcarrier/pauli.hpp"

/// Discrete actions U(alpha, beta) = alpha I + beta X on a Cbit.
///
/// Two regimes are modelled. With alpha in Z2 and beta = 1 - alpha the actions
/// {U_0, U_1} form a group and any history of them is reversible. With real
/// (alpha, beta) on the unit circle the set is not closed, the operators are
/// self-adjoint but not unitary, and inverses are not normalizable; the
/// diagnostics below quantify each of those failures.
///
/// Label convention: U_alpha = alpha I + (1 - alpha) X, so U_1 = I and
/// U_0 = X. Some texts print the opposite labelling next to this same formula;
/// the formula is what is implemented.
namespace qcarrier {

/// Raised when alpha^2 - beta^2 is too close to zero to invert alpha I + beta X.
class SingularInverse : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kSingularTolerance = 1e-10;

class CbitAction {
 public:
  /// Throws std::invalid_argument unless alpha is 0 or 1.
  explicit CbitAction(int alpha);

  int alpha() const { return alpha_; }
  int alpha_bar() const { return 1 - alpha_; }
  TwoLevelOperator op() const;

  friend bool operator==(CbitAction, CbitAction) = default;

 private:
  int alpha_;
};

/// Ordered action parameters. Element 0 acts first.
template <typename Param>
class History {
 public:
  History() = default;
  explicit History(std::vector<Param> params) : params_(std::move(params)) {}

  const std::vector<Param>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  bool empty() const { return params_.empty(); }

  /// `*this` followed by `later`.
  History then(const History& later) const {
    std::vector<Param> joined = params_;
    joined.insert(joined.end(), later.params_.begin(), later.params_.end());
    return History(std::move(joined));
  }

  friend bool operator==(const History&, const History&) = default;

 private:
  std::vector<Param> params_;
};

using CbitHistory = History<CbitAction>;

/// Builds a Cbit history from Z2 labels in application order.
CbitHistory cbit_history(std::initializer_list<int> alphas);
CbitHistory cbit_history(const std::vector<int>& alphas);

/// x -> alpha x + alpha_bar x_bar over Z2. Throws std::invalid_argument for a
/// label outside {0, 1}.
int cbit_apply(CbitAction action, int x);

/// U_{a2} U_{a1} = U_beta with beta = a2 a1 + a2bar a1bar.
CbitAction cbit_compose(CbitAction a2, CbitAction a1);

struct HistoryRun {
  int final_state;
  /// x_1 ... x_n; one entry per action.
  std::vector<int> intermediates;
};

HistoryRun run_history(const CbitHistory& history, int x0);

template <typename Param>
History<Param> reverse_history(const History<Param>& history) {
  return History<Param>(
      std::vector<Param>(history.params().rbegin(), history.params().rend()));
}

/// Real-coefficient action alpha I + beta X. Membership of the unit circle is
/// checked on demand, not enforced.
struct CircleAction {
  double alpha{};
  double beta{};

  bool on_unit_circle(double tol = kStructuralTolerance) const;
  TwoLevelOperator op() const;
};

struct CircleComposition {
  /// Coefficients of U(a2) U(a1); generally off the unit circle.
  CircleAction product;
  /// alpha3^2 + beta3^2.
  double defect;
};

/// Composes two unit-circle actions through the matrix product.
/// Throws std::invalid_argument if either input is off the circle.
CircleComposition circle_compose_defect(CircleAction a2, CircleAction a1);

/// 1 + 4 a2 a1 b2 b1, the closed form of the defect.
double predicted_circle_defect(CircleAction a2, CircleAction a1);

/// (alpha / (alpha^2 - beta^2), -beta / (alpha^2 - beta^2)).
/// Throws SingularInverse when |alpha^2 - beta^2| <= kSingularTolerance.
CircleAction circle_inverse(CircleAction action);

/// 1 / |alpha^2 - beta^2|, the norm of the inverse applied to either Cbit.
double circle_inverse_norm(CircleAction action);

}  // namespace qcarrier
