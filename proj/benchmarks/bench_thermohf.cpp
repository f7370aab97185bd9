#include <benchmark/benchmark.h>

#include <random>

#include "thermohf/harmonic_oscillator.hpp"
#include "thermohf/ising.hpp"
#include "thermohf/lipkin.hpp"
#include "thermohf/oracles.hpp"
#include "thermohf/sweep.hpp"
#include "thermohf/symmetric_eigen.hpp"

using namespace thermohf;

static void BM_JacobiRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  linalg::SymmetricMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a.set(i, j, d(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(linalg::jacobi_eigen(a));
}
BENCHMARK(BM_JacobiRandom)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_LipkinSpectrum(benchmark::State& state) {
  lipkin::Params p;
  p.n_particles = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lipkin::spectrum(p));
}
BENCHMARK(BM_LipkinSpectrum)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_LipkinFockOracle(benchmark::State& state) {
  lipkin::Params p;
  p.n_particles = 8;
  for (auto _ : state) benchmark::DoNotOptimize(oracles::lipkin_fock(p));
}
BENCHMARK(BM_LipkinFockOracle)->Unit(benchmark::kMillisecond);

static void BM_IsingLogZ(benchmark::State& state) {
  ising::Params p;
  const auto point = EnsemblePoint::from_temperature(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(ising::log_z(p, point));
}
BENCHMARK(BM_IsingLogZ);

static void BM_IsingEnumerate(benchmark::State& state) {
  ising::Params p;
  p.n_spins = static_cast<std::size_t>(state.range(0));
  const auto point = EnsemblePoint::from_temperature(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(oracles::ising_enumerate(p, point));
}
BENCHMARK(BM_IsingEnumerate)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_HoSweep(benchmark::State& state) {
  const auto grid = temperature_grid(0.05, 20.0, 200, GridKind::linear);
  const ho::Model model(ho::truncation_for(20.0, 1.0 - DiffConfig{}.relative_step));
  for (auto _ : state) benchmark::DoNotOptimize(hf_sweep(model, grid));
}
BENCHMARK(BM_HoSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
