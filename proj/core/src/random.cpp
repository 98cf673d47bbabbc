#include "qcarrier/random.hpp"

#include <cmath>
#include <numbers>

namespace qcarrier {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Qubit Rng::qubit() {
  Qubit q{{normal(), normal()}, {normal(), normal()}};
  return q.normalized();
}

}  // namespace qcarrier
