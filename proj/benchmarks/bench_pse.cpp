#include <benchmark/benchmark.h>

#include "qcarrier/fourier.hpp"
#include "qcarrier/pse.hpp"

using namespace qcarrier;

namespace {

SpinorField packet(std::size_t n) {
  const SpatialGrid grid(n, -20.0, 20.0);
  return gaussian_packet(grid, {.center = 0.0, .width = 1.0, .momentum = 1.0,
                                .weight_a = 1.0, .weight_b = {0.0, 0.5}});
}

void BM_SplitStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto psi = packet(n);
  const PhysicalParams params{.m = 1.0, .h0 = 1.0, .h1 = 1.0, .eps0 = 0.5,
                              .potential = [](double q) { return 0.5 * q * q; }};
  SplitStepPropagator prop(psi.grid, params, 1e-3);
  for (auto _ : state) {
    prop.step(psi);
    benchmark::DoNotOptimize(psi.a.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SplitStep)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_FourierAnalyze(benchmark::State& state) {
  const auto psi = packet(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_analyze(psi));
  }
}
BENCHMARK(BM_FourierAnalyze)->RangeMultiplier(4)->Range(64, 16384);

void BM_SpectralExact(benchmark::State& state) {
  const auto psi = packet(static_cast<std::size_t>(state.range(0)));
  const PhysicalParams params{.m = 1.0, .h0 = 1.0, .h1 = 1.0, .eps0 = 0.5, .potential = {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_spectral_exact(psi, params, 1.0));
  }
}
BENCHMARK(BM_SpectralExact)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace
