#include "qcarrier/dirac.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcarrier {
namespace {

constexpr complex kI{0.0, 1.0};

TwoLevelOperator sigma(int k) {
  switch (k) {
    case 1:
      return TwoLevelOperator::pauli_x();
    case 2:
      return TwoLevelOperator::pauli_y();
    case 3:
      return TwoLevelOperator::pauli_z();
    default:
      throw std::invalid_argument("Pauli index must be 1, 2 or 3");
  }
}

TwoLevelOperator momentum_sigma(const DiracParams& params) {
  TwoLevelOperator out;
  for (int k = 1; k <= 3; ++k) {
    out += (params.c * params.p[static_cast<std::size_t>(k - 1)]) * sigma(k);
  }
  return out;
}

double entry_max(const DiracOperator& op) {
  double worst = 0.0;
  for (const auto& e : op.entries()) worst = std::max(worst, std::abs(e));
  return worst;
}

RelationCheck exact_check(std::string name, const DiracOperator& got,
                          const DiracOperator& want) {
  return {std::move(name), max_entry_deviation(got, want), 0.0,
          exactly_equal(got, want)};
}

}  // namespace

DiracOperator DiracOperator::kron(const TwoLevelOperator& outer,
                                  const TwoLevelOperator& inner) {
  DiracOperator out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          out.entries_[static_cast<std::size_t>(4 * (2 * r1 + r2) + 2 * c1 + c2)] =
              outer(r1, c1) * inner(r2, c2);
  out.factors_ = Factors{outer, inner};
  return out;
}

DiracOperator DiracOperator::identity() {
  return kron(TwoLevelOperator::identity(), TwoLevelOperator::identity());
}

DiracOperator DiracOperator::adjoint() const {
  DiracOperator out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out.entries_[static_cast<std::size_t>(4 * r + c)] = std::conj((*this)(c, r));
  if (factors_) out.factors_ = Factors{factors_->first.adjoint(), factors_->second.adjoint()};
  return out;
}

complex DiracOperator::trace() const {
  return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

DiracOperator operator+(const DiracOperator& lhs, const DiracOperator& rhs) {
  std::array<complex, 16> e{};
  for (std::size_t k = 0; k < 16; ++k) e[k] = lhs.entries()[k] + rhs.entries()[k];
  return DiracOperator(e);
}

DiracOperator operator-(const DiracOperator& lhs, const DiracOperator& rhs) {
  std::array<complex, 16> e{};
  for (std::size_t k = 0; k < 16; ++k) e[k] = lhs.entries()[k] - rhs.entries()[k];
  return DiracOperator(e);
}

DiracOperator operator*(complex s, const DiracOperator& op) {
  if (op.factors()) {
    return DiracOperator::kron(s * op.factors()->first, op.factors()->second);
  }
  std::array<complex, 16> e{};
  for (std::size_t k = 0; k < 16; ++k) e[k] = s * op.entries()[k];
  return DiracOperator(e);
}

DiracOperator operator*(const DiracOperator& lhs, const DiracOperator& rhs) {
  if (lhs.factors() && rhs.factors()) {
    return DiracOperator::kron(lhs.factors()->first * rhs.factors()->first,
                               lhs.factors()->second * rhs.factors()->second);
  }
  std::array<complex, 16> e{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      complex s{};
      for (int k = 0; k < 4; ++k) s += lhs(r, k) * rhs(k, c);
      e[static_cast<std::size_t>(4 * r + c)] = s;
    }
  return DiracOperator(e);
}

DiracVector apply(const DiracOperator& op, const DiracVector& v) {
  DiracVector out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r)] += op(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

DiracOperator anticommutator(const DiracOperator& lhs, const DiracOperator& rhs) {
  return lhs * rhs + rhs * lhs;
}

double max_entry_deviation(const DiracOperator& lhs, const DiracOperator& rhs) {
  return entry_max(lhs - rhs);
}

bool exactly_equal(const DiracOperator& lhs, const DiracOperator& rhs) {
  return lhs.entries() == rhs.entries();
}

double DiracParams::energy() const {
  const double p2 = std::inner_product(p.begin(), p.end(), p.begin(), 0.0);
  const double rest = m * c * c;
  return std::sqrt(rest * rest + c * c * p2);
}

void DiracParams::validate() const {
  if (!(m >= 0.0) || !(c > 0.0) || !(h0 > 0.0)) {
    throw std::invalid_argument("Dirac params require m >= 0, c > 0, h0 > 0");
  }
  if (!std::all_of(p.begin(), p.end(), [](double x) { return std::isfinite(x); })) {
    throw std::invalid_argument("momentum components must be finite");
  }
  if (!(energy() > 0.0)) {
    throw std::invalid_argument("E_p must be positive");
  }
}

DiracOperator alpha_matrix(int k) {
  return DiracOperator::kron(TwoLevelOperator::pauli_x(), sigma(k));
}

DiracOperator beta_matrix() {
  return DiracOperator::kron(TwoLevelOperator::pauli_z(),
                             TwoLevelOperator::identity());
}

DiracOperator build_hamiltonian(const DiracParams& params) {
  params.validate();
  const double rest = params.m * params.c * params.c;
  return DiracOperator::kron(TwoLevelOperator::pauli_z(),
                             rest * TwoLevelOperator::identity()) +
         DiracOperator::kron(TwoLevelOperator::pauli_x(), momentum_sigma(params));
}

double square_check(const DiracParams& params) {
  const auto h = build_hamiltonian(params);
  const double e = params.energy();
  return max_entry_deviation(h * h, (e * e) * DiracOperator::identity());
}

std::array<double, 4> hamiltonian_spectrum(const DiracParams& params) {
  const auto h = build_hamiltonian(params);
  Eigen::Matrix4cd dense;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) dense(r, c) = h(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(dense,
                                                         Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values(0), values(1), values(2), values(3)};
}

double DiracState::norm2() const {
  double s = 0.0;
  for (const auto& x : components) s += std::norm(x);
  return s;
}

DiracState plane_wave_solution(int lambda, const DiracParams& params,
                               const Qubit& phi, double t) {
  if (lambda != 1 && lambda != -1) {
    throw std::invalid_argument("energy branch lambda must be +1 or -1");
  }
  params.validate();
  if (!phi.is_normalized()) {
    throw std::invalid_argument("plane_wave_solution: phi must be normalized");
  }
  const double e = params.energy();
  const double rest = params.m * params.c * params.c;
  const double p2 = std::inner_product(params.p.begin(), params.p.end(),
                                       params.p.begin(), 0.0);
  // m c^2 - E_p evaluated without cancellation.
  const double denominator =
      lambda == 1 ? rest + e : -(params.c * params.c * p2) / (rest + e);
  if (!(std::abs(denominator) > 1e-10 * e)) {
    throw SingularBranch(
        "m c^2 + lambda E_p vanishes: negative-energy branch at rest");
  }
  const Qubit lower = (1.0 / denominator) * qcarrier::apply(momentum_sigma(params), phi);
  const double norm = 1.0 / std::sqrt(phi.norm2() + lower.norm2());
  const complex phase =
      norm * std::exp(-kI * (static_cast<double>(lambda) * t * e / params.h0));
  // |1>_1 is the first column, so the upper block holds |phi>.
  return {{phase * phi.a, phase * phi.b, phase * lower.a, phase * lower.b},
          lambda};
}

double eigen_residual(const DiracParams& params, const DiracState& state) {
  const auto h = build_hamiltonian(params);
  const auto hv = qcarrier::apply(h, state.components);
  const double target = static_cast<double>(state.lambda) * params.energy();
  double s = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    s += std::norm(hv[k] - target * state.components[k]);
  }
  return std::sqrt(s);
}

double lower_block_norm(const DiracState& state) {
  return std::sqrt(std::norm(state.components[2]) +
                   std::norm(state.components[3]));
}

DiracVector project_upper(const DiracVector& v) {
  const TwoLevelOperator selector{1.0, 0.0, 0.0, 0.0};
  return qcarrier::apply(DiracOperator::kron(selector, TwoLevelOperator::identity()), v);
}

std::array<DiracOperator, 4> gamma_matrices() {
  const auto iy = kI * TwoLevelOperator::pauli_y();
  return {DiracOperator::kron(TwoLevelOperator::pauli_z(),
                              TwoLevelOperator::identity()),
          DiracOperator::kron(iy, TwoLevelOperator::pauli_x()),
          DiracOperator::kron(iy, TwoLevelOperator::pauli_y()),
          DiracOperator::kron(iy, TwoLevelOperator::pauli_z())};
}

DiracOperator printed_gamma2() {
  return DiracOperator::kron(-1.0 * TwoLevelOperator::pauli_y(),
                             TwoLevelOperator::pauli_y());
}

double AlgebraReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.max_deviation);
  return worst;
}

bool AlgebraReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.pass; });
}

AlgebraReport verify_alpha_beta_algebra() {
  AlgebraReport report;
  const auto id = DiracOperator::identity();
  const DiracOperator zero;
  const auto beta = beta_matrix();
  for (int k = 1; k <= 3; ++k) {
    for (int l = k; l <= 3; ++l) {
      const auto want = k == l ? 2.0 * id : zero;
      report.checks.push_back(exact_check(
          "{alpha_" + std::to_string(k) + ", alpha_" + std::to_string(l) + "}",
          anticommutator(alpha_matrix(k), alpha_matrix(l)), want));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    report.checks.push_back(exact_check(
        "{alpha_" + std::to_string(k) + ", beta}",
        anticommutator(alpha_matrix(k), beta), zero));
  }
  report.checks.push_back(exact_check("beta^2 = I4", beta * beta, id));
  for (int k = 1; k <= 3; ++k) {
    const auto a = alpha_matrix(k);
    report.checks.push_back(
        exact_check("alpha_" + std::to_string(k) + " hermitian", a.adjoint(), a));
  }
  report.checks.push_back(exact_check("beta hermitian", beta.adjoint(), beta));
  return report;
}

namespace {

AlgebraReport clifford_checks(const std::array<DiracOperator, 4>& gammas,
                              bool only_involving_2) {
  AlgebraReport report;
  const auto id = DiracOperator::identity();
  const DiracOperator zero;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      if (only_involving_2 && mu != 2 && nu != 2) continue;
      const double eta = mu != nu ? 0.0 : (mu == 0 ? 1.0 : -1.0);
      const auto want = eta == 0.0 ? zero : (2.0 * eta) * id;
      report.checks.push_back(exact_check(
          "{gamma^" + std::to_string(mu) + ", gamma^" + std::to_string(nu) + "}",
          anticommutator(gammas[static_cast<std::size_t>(mu)],
                         gammas[static_cast<std::size_t>(nu)]),
          want));
    }
  }
  return report;
}

}  // namespace

AlgebraReport verify_clifford_algebra() {
  return clifford_checks(gamma_matrices(), false);
}

AlgebraReport verify_printed_gamma2() {
  auto gammas = gamma_matrices();
  gammas[2] = printed_gamma2();
  return clifford_checks(gammas, true);
}

}  // namespace qcarrier
