#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "qcarrier/spinor_field.hpp"

namespace qcarrier {

/// Unnormalized 1-D complex DFT of a fixed length, backed by FFTW.
///
///   forward:  X_k = sum_j x_j exp(-2 pi i j k / n)
///   backward: x_j = sum_k X_k exp(+2 pi i j k / n)
///
/// Plans are created with FFTW_ESTIMATE, so results are bitwise reproducible
/// for a given size. An instance owns its scratch buffers and must not be
/// shared between threads; separate instances may run concurrently.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);
  ~FourierTransform();
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;

  std::size_t size() const;

  /// `in` and `out` may alias. Throws std::invalid_argument on size mismatch.
  void forward(std::span<const complex> in, std::span<complex> out);
  void backward(std::span<const complex> in, std::span<complex> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Position -> momentum:  a~(p) = integral dq exp(-i p q / h1) a(q),
/// evaluated as a Riemann sum over the grid nodes.
/// Throws std::invalid_argument if `psi` is not in the position domain.
SpinorField fourier_analyze(const SpinorField& psi);

/// Momentum -> position:  a(q) = integral dp/(2 pi h1) exp(+i p q / h1) a~(p).
/// Exact inverse of fourier_analyze on the grid.
/// Throws std::invalid_argument if `psi_tilde` is not in the momentum domain.
SpinorField fourier_synthesize(const SpinorField& psi_tilde);

}  // namespace qcarrier
