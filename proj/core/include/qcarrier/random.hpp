#pragma once

#include <cstdint>
#include <random>

#include "qcarrier/pauli.hpp"

namespace qcarrier {

/// Seeded generator with a platform-independent mapping to doubles, so that
/// property sweeps and CLI runs reproduce bit-for-bit across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [lo, hi].
  int uniform_int(int lo, int hi);
  /// Standard normal via Box-Muller.
  double normal();
  int bit() { return static_cast<int>(engine_() >> 63); }

  /// Haar-uniform normalized qubit.
  Qubit qubit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcarrier
