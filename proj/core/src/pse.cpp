#include "qcarrier/pse.hpp"

#include <cmath>
#include <stdexcept>

namespace qcarrier {
namespace {

constexpr complex kI{0.0, 1.0};

void require_domain(const SpinorField& psi, Domain domain, const char* what) {
  psi.validate();
  if (psi.domain != domain) throw std::invalid_argument(what);
}

void require_matching_h1(const SpatialGrid& grid, const PhysicalParams& params) {
  if (grid.h1() != params.h1) {
    throw std::invalid_argument("grid h1 differs from physical params h1");
  }
}

// cos(theta) I - i sin(theta) X on one node pair, times a phase.
inline void mix(complex& a, complex& b, double c, double s, complex phase) {
  const complex a0 = a;
  const complex b0 = b;
  a = phase * (c * a0 - kI * s * b0);
  b = phase * (-kI * s * a0 + c * b0);
}

}  // namespace

void PhysicalParams::validate() const {
  if (!(m > 0.0) || !(h0 > 0.0) || !(h1 > 0.0)) {
    throw std::invalid_argument("physical params require m, h0, h1 > 0");
  }
  if (!std::isfinite(eps0)) {
    throw std::invalid_argument("eps0 must be finite");
  }
}

SpinorField local_evolve(const SpinorField& psi0, const PotentialFn& mu_of_q,
                         double nu, double tau) {
  require_domain(psi0, Domain::position, "local_evolve expects position space");
  SpinorField out = psi0;
  const double c = std::cos(nu * tau);
  const double s = std::sin(nu * tau);
  for (std::size_t j = 0; j < out.a.size(); ++j) {
    const double mu = mu_of_q ? mu_of_q(out.grid.q(j)) : 0.0;
    mix(out.a[j], out.b[j], c, s, std::exp(-kI * (tau * mu)));
  }
  return out;
}

SpinorField momentum_evolve(const SpinorField& psi_tilde,
                            const PhysicalParams& params, double t) {
  params.validate();
  require_domain(psi_tilde, Domain::momentum,
                 "momentum_evolve expects momentum space");
  require_matching_h1(psi_tilde.grid, params);
  SpinorField out = psi_tilde;
  const double angle = params.eps0 * t / params.h0;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  for (std::size_t k = 0; k < out.a.size(); ++k) {
    const double energy = params.kinetic(out.grid.p(k));
    mix(out.a[k], out.b[k], c, s, std::exp(-kI * (t * energy / params.h0)));
  }
  return out;
}

SpinorField evolve_spectral_exact(const SpinorField& psi0,
                                  const PhysicalParams& params, double t) {
  if (params.potential) {
    throw std::invalid_argument(
        "evolve_spectral_exact is only exact for V = 0");
  }
  return fourier_synthesize(momentum_evolve(fourier_analyze(psi0), params, t));
}

std::size_t step_count(double t_final, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("time step must be positive");
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw std::invalid_argument("t_final must be finite and non-negative");
  }
  const double ratio = t_final / dt;
  const double steps = std::round(ratio);
  if (std::abs(ratio - steps) > 1e-9 * std::max(1.0, ratio)) {
    throw std::invalid_argument(
        "t_final must be an integer multiple of dt (no partial steps)");
  }
  return static_cast<std::size_t>(steps);
}

SplitStepPropagator::SplitStepPropagator(const SpatialGrid& grid,
                                         const PhysicalParams& params,
                                         double dt)
    : grid_(grid), dt_(dt), fft_(grid.n_points()) {
  params.validate();
  require_matching_h1(grid, params);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("time step must be positive");
  }
  const std::size_t n = grid.n_points();
  const double half = 0.5 * dt;
  mix_cos_ = std::cos(params.eps0 * half / params.h0);
  mix_sin_ = std::sin(params.eps0 * half / params.h0);

  potential_phase_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    potential_phase_[j] =
        std::exp(-kI * (half * params.potential_at(grid.q(j)) / params.h0));
  }
  kinetic_phase_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    // FFT bin f holds centered index (f + n/2) mod n.
    const double p = grid.p((k + n / 2) % n);
    kinetic_phase_[k] = std::exp(-kI * (dt * params.kinetic(p) / params.h0));
  }
  scratch_.resize(n);
}

void SplitStepPropagator::half_step_diagonal(SpinorField& psi) const {
  for (std::size_t j = 0; j < psi.a.size(); ++j) {
    mix(psi.a[j], psi.b[j], mix_cos_, mix_sin_, potential_phase_[j]);
  }
}

void SplitStepPropagator::kinetic_step(std::vector<complex>& channel) {
  fft_.forward(channel, scratch_);
  for (std::size_t k = 0; k < scratch_.size(); ++k) {
    scratch_[k] *= kinetic_phase_[k];
  }
  fft_.backward(scratch_, channel);
  const double scale = 1.0 / static_cast<double>(channel.size());
  for (auto& x : channel) x *= scale;
}

void SplitStepPropagator::step(SpinorField& psi) {
  require_domain(psi, Domain::position, "split-step expects position space");
  if (!(psi.grid == grid_)) {
    throw std::invalid_argument("split-step: field grid differs from propagator");
  }
  half_step_diagonal(psi);
  kinetic_step(psi.a);
  kinetic_step(psi.b);
  half_step_diagonal(psi);
}

SpinorField SplitStepPropagator::advance(SpinorField psi, std::size_t steps) {
  for (std::size_t s = 0; s < steps; ++s) step(psi);
  return psi;
}

SpinorField propagate_split_step(const SpinorField& psi0,
                                 const PhysicalParams& params, double t_final,
                                 double dt) {
  return propagate_split_step(psi0, params, t_final, dt, 0, {});
}

SpinorField propagate_split_step(const SpinorField& psi0,
                                 const PhysicalParams& params, double t_final,
                                 double dt, std::size_t stride,
                                 const SnapshotFn& on_snapshot) {
  require_domain(psi0, Domain::position, "split-step expects position space");
  const std::size_t steps = step_count(t_final, dt);
  SplitStepPropagator propagator(psi0.grid, params, dt);
  SpinorField psi = psi0;
  if (on_snapshot) on_snapshot(0, 0.0, psi);
  for (std::size_t s = 1; s <= steps; ++s) {
    propagator.step(psi);
    const bool due = stride > 0 && s % stride == 0;
    if (on_snapshot && (due || s == steps)) {
      on_snapshot(s, static_cast<double>(s) * dt, psi);
    }
  }
  return psi;
}

std::vector<complex> propagate_scalar(std::span<const complex> psi0,
                                      const SpatialGrid& grid,
                                      const PhysicalParams& params,
                                      double t_final, double dt) {
  params.validate();
  require_matching_h1(grid, params);
  if (psi0.size() != grid.n_points()) {
    throw std::invalid_argument("scalar wavefunction length differs from grid");
  }
  const std::size_t steps = step_count(t_final, dt);
  const std::size_t n = grid.n_points();

  std::vector<complex> half_v(n);
  for (std::size_t j = 0; j < n; ++j) {
    half_v[j] = std::exp(
        -kI * (0.5 * dt * params.potential_at(grid.q(j)) / params.h0));
  }
  std::vector<complex> kinetic(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = grid.p((k + n / 2) % n);
    kinetic[k] = std::exp(-kI * (dt * params.kinetic(p) / params.h0));
  }

  FourierTransform fft(n);
  std::vector<complex> psi(psi0.begin(), psi0.end());
  std::vector<complex> bins(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t s = 0; s < steps; ++s) {
    for (std::size_t j = 0; j < n; ++j) psi[j] *= half_v[j];
    fft.forward(psi, bins);
    for (std::size_t k = 0; k < n; ++k) bins[k] *= kinetic[k];
    fft.backward(bins, psi);
    for (std::size_t j = 0; j < n; ++j) psi[j] *= scale * half_v[j];
  }
  return psi;
}

SpinorField reduce_nu_zero(const SpinorField& psi0, const PhysicalParams& params,
                           double t_final, double dt) {
  require_domain(psi0, Domain::position, "reduce_nu_zero expects position space");
  if (params.eps0 != 0.0) {
    throw std::invalid_argument("reduce_nu_zero requires eps0 = 0");
  }
  SpinorField out = psi0;
  out.a = propagate_scalar(psi0.a, psi0.grid, params, t_final, dt);
  out.b = propagate_scalar(psi0.b, psi0.grid, params, t_final, dt);
  return out;
}

Observables observables(const SpinorField& psi, const PhysicalParams& params) {
  params.validate();
  require_domain(psi, Domain::position, "observables expects position space");
  const auto& grid = psi.grid;
  const std::size_t n = grid.n_points();
  const double dq = grid.dq();

  Observables obs;
  obs.density.resize(n);
  double weight_a = 0.0;
  double weight_b = 0.0;
  double first_moment = 0.0;
  double potential_energy = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double da = std::norm(psi.a[j]);
    const double db = std::norm(psi.b[j]);
    obs.density[j] = da + db;
    weight_a += da;
    weight_b += db;
    first_moment += grid.q(j) * (da + db);
    potential_energy += params.potential_at(grid.q(j)) * (da + db);
  }
  obs.p_x0 = weight_a * dq;
  obs.p_x0bar = weight_b * dq;
  obs.mean_q = first_moment * dq;

  const SpinorField tilde = fourier_analyze(psi);
  double kinetic = 0.0;
  double cross = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    kinetic += (std::norm(tilde.a[k]) + std::norm(tilde.b[k])) *
               params.kinetic(grid.p(k));
    cross += (std::conj(tilde.a[k]) * tilde.b[k]).real();
  }
  const double measure = grid.momentum_measure();
  obs.coupling_energy = 2.0 * params.eps0 * cross * measure;
  obs.mean_energy =
      kinetic * measure + obs.coupling_energy + potential_energy * dq;
  return obs;
}

SpinorField normalized(SpinorField psi) {
  const double norm = std::sqrt(psi.norm2());
  if (norm == 0.0) throw std::invalid_argument("cannot normalize a zero field");
  for (auto& x : psi.a) x /= norm;
  for (auto& x : psi.b) x /= norm;
  return psi;
}

namespace {

template <typename Profile>
SpinorField build_packet(const SpatialGrid& grid, complex weight_a,
                         complex weight_b, Profile profile) {
  if (weight_a == complex{} && weight_b == complex{}) {
    throw std::invalid_argument("packet needs a non-zero channel weight");
  }
  SpinorField psi = SpinorField::zeros(grid);
  for (std::size_t j = 0; j < grid.n_points(); ++j) {
    const complex f = profile(grid.q(j));
    psi.a[j] = weight_a * f;
    psi.b[j] = weight_b * f;
  }
  return normalized(std::move(psi));
}

}  // namespace

SpinorField gaussian_packet(const SpatialGrid& grid, const GaussianPacket& spec) {
  if (!(spec.width > 0.0)) {
    throw std::invalid_argument("gaussian packet width must be positive");
  }
  return build_packet(grid, spec.weight_a, spec.weight_b, [&](double q) {
    const double x = (q - spec.center) / spec.width;
    return std::exp(-0.5 * x * x) * std::exp(kI * (spec.momentum * q / grid.h1()));
  });
}

SpinorField windowed_plane_wave(const SpatialGrid& grid,
                                const WindowedPlaneWave& spec) {
  if (!(spec.half_width > 0.0) || !(spec.edge > 0.0)) {
    throw std::invalid_argument("window half-width and edge must be positive");
  }
  return build_packet(grid, spec.weight_a, spec.weight_b, [&](double q) {
    const double d = std::abs(q - spec.center);
    const double window = 0.5 * (1.0 - std::tanh((d - spec.half_width) / spec.edge));
    return window * std::exp(kI * (spec.momentum * q / grid.h1()));
  });
}

}  // namespace qcarrier
