#include "qcarrier/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace qcarrier {
namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr complex kI{0.0, 1.0};

}  // namespace

struct FourierTransform::Impl {
  std::size_t n;
  fftw_complex* buffer;
  fftw_plan forward_plan;
  fftw_plan backward_plan;

  explicit Impl(std::size_t size) : n(size) {
    std::lock_guard lock(planner_mutex());
    buffer = fftw_alloc_complex(n);
    if (buffer == nullptr) throw std::bad_alloc();
    const int len = static_cast<int>(n);
    forward_plan =
        fftw_plan_dft_1d(len, buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_plan =
        fftw_plan_dft_1d(len, buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_plan);
    fftw_destroy_plan(backward_plan);
    fftw_free(buffer);
  }

  void run(fftw_plan plan, std::span<const complex> in, std::span<complex> out) {
    if (in.size() != n || out.size() != n) {
      throw std::invalid_argument("FourierTransform: size mismatch");
    }
    auto* work = reinterpret_cast<complex*>(buffer);
    std::copy(in.begin(), in.end(), work);
    fftw_execute(plan);
    std::copy(work, work + n, out.begin());
  }
};

FourierTransform::FourierTransform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("FourierTransform: empty size");
  impl_ = std::make_unique<Impl>(n);
}

FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept =
    default;

std::size_t FourierTransform::size() const { return impl_->n; }

void FourierTransform::forward(std::span<const complex> in,
                               std::span<complex> out) {
  impl_->run(impl_->forward_plan, in, out);
}

void FourierTransform::backward(std::span<const complex> in,
                                std::span<complex> out) {
  impl_->run(impl_->backward_plan, in, out);
}

// Centered momentum index k maps to FFT bin (k + n/2) mod n. The grid origin
// q_min contributes a phase exp(-i p q_min / h1) per momentum node.

SpinorField fourier_analyze(const SpinorField& psi) {
  psi.validate();
  if (psi.domain != Domain::position) {
    throw std::invalid_argument("fourier_analyze expects a position-space field");
  }
  const auto& grid = psi.grid;
  const std::size_t n = grid.n_points();
  FourierTransform fft(n);
  SpinorField out = SpinorField::zeros(grid, Domain::momentum);
  std::vector<complex> bins(n);
  for (auto [src, dst] : {std::pair{&psi.a, &out.a}, std::pair{&psi.b, &out.b}}) {
    fft.forward(*src, bins);
    for (std::size_t k = 0; k < n; ++k) {
      const complex origin = std::exp(-kI * (grid.p(k) * grid.q_min() / grid.h1()));
      (*dst)[k] = grid.dq() * origin * bins[(k + n / 2) % n];
    }
  }
  return out;
}

SpinorField fourier_synthesize(const SpinorField& psi_tilde) {
  psi_tilde.validate();
  if (psi_tilde.domain != Domain::momentum) {
    throw std::invalid_argument(
        "fourier_synthesize expects a momentum-space field");
  }
  const auto& grid = psi_tilde.grid;
  const std::size_t n = grid.n_points();
  FourierTransform fft(n);
  SpinorField out = SpinorField::zeros(grid, Domain::position);
  std::vector<complex> bins(n);
  const double scale = grid.momentum_measure();
  for (auto [src, dst] :
       {std::pair{&psi_tilde.a, &out.a}, std::pair{&psi_tilde.b, &out.b}}) {
    for (std::size_t k = 0; k < n; ++k) {
      const complex origin = std::exp(kI * (grid.p(k) * grid.q_min() / grid.h1()));
      bins[(k + n / 2) % n] = origin * (*src)[k];
    }
    fft.backward(bins, *dst);
    for (auto& x : *dst) x *= scale;
  }
  return out;
}

}  // namespace qcarrier
