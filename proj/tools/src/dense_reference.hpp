#pragma once

#include "qcarrier/pse.hpp"

namespace qcarrier::cli::detail {

/// exp(-i t H / h0) psi0 with H assembled as a dense 2n x 2n Hermitian matrix
/// (kinetic part by direct Fourier sums) and exponentiated through its
/// eigendecomposition. Independent of the FFT-based propagator; O(n^3).
SpinorField dense_propagate(const SpinorField& psi0, const PhysicalParams& params,
                            double t);

}  // namespace qcarrier::cli::detail
