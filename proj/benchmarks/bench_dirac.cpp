#include <benchmark/benchmark.h>

#include "qcarrier/dirac.hpp"

using namespace qcarrier;

namespace {

const DiracParams kParams{.m = 1.0, .c = 1.0, .p = {1.0, 2.0, 3.0}};

void BM_BuildHamiltonian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(kParams));
}
BENCHMARK(BM_BuildHamiltonian);

void BM_SquareCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(square_check(kParams));
}
BENCHMARK(BM_SquareCheck);

void BM_Spectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_spectrum(kParams));
}
BENCHMARK(BM_Spectrum);

void BM_PlaneWave(benchmark::State& state) {
  const Qubit up = Qubit::ket(1);
  for (auto _ : state) benchmark::DoNotOptimize(plane_wave_solution(-1, kParams, up, 0.5));
}
BENCHMARK(BM_PlaneWave);

void BM_CliffordReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_clifford_algebra());
}
BENCHMARK(BM_CliffordReport);

}  // namespace
