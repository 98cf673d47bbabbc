#include "dense_reference.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace qcarrier::cli::detail {

SpinorField dense_propagate(const SpinorField& psi0, const PhysicalParams& params,
                            double t) {
  const auto& grid = psi0.grid;
  const auto n = static_cast<Eigen::Index>(grid.n_points());
  const auto p = grid.momenta();
  const auto q = grid.positions();

  // T_jl = (1/n) sum_k T(p_k) exp(i p_k (q_j - q_l) / h1)
  Eigen::MatrixXcd kinetic(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      complex sum{};
      const double dq = q[static_cast<std::size_t>(j)] - q[static_cast<std::size_t>(l)];
      for (std::size_t k = 0; k < p.size(); ++k) {
        sum += params.kinetic(p[k]) * std::polar(1.0, p[k] * dq / params.h1);
      }
      kinetic(j, l) = sum / static_cast<double>(n);
    }
  }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  h.topLeftCorner(n, n) = kinetic;
  h.bottomRightCorner(n, n) = kinetic;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double v = params.potential_at(q[static_cast<std::size_t>(j)]);
    h(j, j) += v;
    h(n + j, n + j) += v;
    h(j, n + j) = params.eps0;
    h(n + j, j) = params.eps0;
  }
  h = (0.5 * (h + h.adjoint())).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<complex>() * complex{0.0, -t / params.h0})
          .array()
          .exp();

  Eigen::VectorXcd v(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    v(j) = psi0.a[static_cast<std::size_t>(j)];
    v(n + j) = psi0.b[static_cast<std::size_t>(j)];
  }
  const Eigen::MatrixXcd& u = solver.eigenvectors();
  const Eigen::VectorXcd out = u * phases.asDiagonal() * (u.adjoint() * v);

  SpinorField result = psi0;
  for (Eigen::Index j = 0; j < n; ++j) {
    result.a[static_cast<std::size_t>(j)] = out(j);
    result.b[static_cast<std::size_t>(j)] = out(n + j);
  }
  return result;
}

}  // namespace qcarrier::cli::detail
