#include <benchmark/benchmark.h>

#include <numbers>

#include "ising2q/entanglement.hpp"
#include "ising2q/presets.hpp"
#include "ising2q/sweep.hpp"

namespace {

using namespace ising2q;

const ModelParams kPoint{1.0, 1.3, 0.9, 0.3 * std::numbers::pi, 0.7 * std::numbers::pi, 0.4};

void BM_Eigh(benchmark::State& state) {
  const SymMatrix4 h = hamiltonian(kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(BM_Eigh);

void BM_ThermalState(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(thermal_state(kPoint));
}
BENCHMARK(BM_ThermalState);

void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix rho = thermal_state(kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_ConcurrenceBruteforce(benchmark::State& state) {
  const DensityMatrix rho = thermal_state(kPoint);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_bruteforce(rho));
}
BENCHMARK(BM_ConcurrenceBruteforce);

void BM_CurvePreset(benchmark::State& state) {
  const SweepSpec spec = figure_preset("fig1b").curves.front();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(spec.size()));
}
BENCHMARK(BM_CurvePreset)->Unit(benchmark::kMillisecond);

void BM_ContourPreset(benchmark::State& state) {
  const SweepSpec spec = figure_preset("fig6b").curves.front();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, static_cast<unsigned>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(spec.size()));
}
BENCHMARK(BM_ContourPreset)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
