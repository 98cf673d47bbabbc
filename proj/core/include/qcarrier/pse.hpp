#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qcarrier/fourier.hpp"
#include "qcarrier/spinor_field.hpp"

/// Qubit carried by a massive particle on a 1-D periodic grid.
///
/// The state is a_t(q)|x0> + b_t(q)|x0bar> and obeys
///
///   i h0 d/dt psi = [ (1/2m)(-i h1 d/dq)^2 + V(q) ] I psi + eps0 X psi.
///
/// eps0 carries the coupling product (energy scale times nu) as a single
/// constant. h0 (time evolution) and h1 (position/momentum conjugacy) are
/// independent action constants.
namespace qcarrier {

using PotentialFn = std::function<double(double)>;

struct PhysicalParams {
  double m = 1.0;
  double h0 = 1.0;
  double h1 = 1.0;
  double eps0 = 0.0;
  /// V(q); empty means V = 0.
  PotentialFn potential;

  /// Throws std::invalid_argument unless m, h0, h1 > 0 and eps0 is finite.
  void validate() const;
  double kinetic(double p) const { return p * p / (2.0 * m); }
  double potential_at(double q) const { return potential ? potential(q) : 0.0; }
};

/// Pointwise exp(-i tau (mu(q) I + nu X)) at every grid node:
///   a_tau = e^{-i tau mu}(a0 cos nu tau - i b0 sin nu tau)
///   b_tau = e^{-i tau mu}(-i a0 sin nu tau + b0 cos nu tau)
SpinorField local_evolve(const SpinorField& psi0, const PotentialFn& mu_of_q,
                         double nu, double tau);

/// Exact evolution of a momentum-space field under T(p) I + eps0 X:
/// phase exp(-i t T(p)/h0) times the cos/sin mixing with angle eps0 t / h0.
SpinorField momentum_evolve(const SpinorField& psi_tilde,
                            const PhysicalParams& params, double t);

/// analyze -> momentum_evolve -> synthesize. Time-step free; only valid for
/// V = 0 (throws std::invalid_argument if a potential is set).
SpinorField evolve_spectral_exact(const SpinorField& psi0,
                                  const PhysicalParams& params, double t);

/// Number of whole steps of size dt in t_final. Throws std::invalid_argument
/// for dt <= 0, t_final < 0, or t_final not an integer multiple of dt.
std::size_t step_count(double t_final, double dt);

/// Strang splitting D(dt/2) K(dt) D(dt/2) where
///   D(s) = exp(-i s V(q)/h0) (cos(eps0 s/h0) I - i sin(eps0 s/h0) X)
///   K(s) = exp(-i s T(p)/h0) applied in momentum space.
class SplitStepPropagator {
 public:
  SplitStepPropagator(const SpatialGrid& grid, const PhysicalParams& params,
                      double dt);

  double dt() const { return dt_; }
  const SpatialGrid& grid() const { return grid_; }

  /// One full step, in place.
  void step(SpinorField& psi);
  SpinorField advance(SpinorField psi, std::size_t steps);

 private:
  void half_step_diagonal(SpinorField& psi) const;
  void kinetic_step(std::vector<complex>& channel);

  SpatialGrid grid_;
  double dt_;
  double mix_cos_;
  double mix_sin_;
  std::vector<complex> potential_phase_;
  std::vector<complex> kinetic_phase_;  // FFT bin order
  std::vector<complex> scratch_;
  FourierTransform fft_;
};

/// Called with (step index, time, state) at step 0 and every `stride` steps,
/// and always at the final step.
using SnapshotFn = std::function<void(std::size_t, double, const SpinorField&)>;

SpinorField propagate_split_step(const SpinorField& psi0,
                                 const PhysicalParams& params, double t_final,
                                 double dt);
SpinorField propagate_split_step(const SpinorField& psi0,
                                 const PhysicalParams& params, double t_final,
                                 double dt, std::size_t stride,
                                 const SnapshotFn& on_snapshot);

/// Strang split-step for a single scalar Schrodinger wavefunction under
/// H0 = T(p) + V(q).
std::vector<complex> propagate_scalar(std::span<const complex> psi0,
                                      const SpatialGrid& grid,
                                      const PhysicalParams& params,
                                      double t_final, double dt);

/// eps0 = 0 evolution: a and b each follow the scalar Schrodinger equation
/// independently. Throws std::invalid_argument when eps0 != 0.
SpinorField reduce_nu_zero(const SpinorField& psi0, const PhysicalParams& params,
                           double t_final, double dt);

struct Observables {
  std::vector<double> density;
  double p_x0 = 0.0;
  double p_x0bar = 0.0;
  double mean_q = 0.0;
  /// Kinetic + coupling terms evaluated in momentum space, plus <V>.
  double mean_energy = 0.0;
  /// The coupling term 2 eps0 Re sum a~* b~ dp/(2 pi h1) on its own.
  double coupling_energy = 0.0;
};

Observables observables(const SpinorField& psi, const PhysicalParams& params);

/// exp(-(q - center)^2 / (2 width^2)) exp(i momentum q / h1), split between
/// the channels in proportion to the given weights and normalized.
struct GaussianPacket {
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
  complex weight_a{1.0};
  complex weight_b{0.0};
};

SpinorField gaussian_packet(const SpatialGrid& grid, const GaussianPacket& spec);

/// Plane wave exp(i momentum q / h1) under a flat-top window of half-width
/// `half_width` with tanh edges of length `edge`, normalized.
struct WindowedPlaneWave {
  double momentum = 0.0;
  double center = 0.0;
  double half_width = 1.0;
  double edge = 0.5;
  complex weight_a{1.0};
  complex weight_b{0.0};
};

SpinorField windowed_plane_wave(const SpatialGrid& grid,
                                const WindowedPlaneWave& spec);

/// Scales a position-space field to unit norm.
SpinorField normalized(SpinorField psi);

}  // namespace qcarrier
