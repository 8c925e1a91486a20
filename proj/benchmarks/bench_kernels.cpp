#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "rfdress/besselx.hpp"
#include "rfdress/core.hpp"
#include "rfdress/ensemble.hpp"
#include "rfdress/floquet.hpp"
#include "rfdress/lzs.hpp"
#include "rfdress/timedomain.hpp"
#include "rfdress/units.hpp"

namespace {

using namespace rfdress;
using units::from_mhz;

void BM_GenBesselSum(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(besselx::gen_bessel_sum({3, x, 0.5 * x}));
}
BENCHMARK(BM_GenBesselSum)->Arg(1)->Arg(10)->Arg(50);

void BM_GenBesselIntegral(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(besselx::gen_bessel_integral({3, x, 0.5 * x}));
}
BENCHMARK(BM_GenBesselIntegral)->Arg(1)->Arg(10)->Arg(50);

void BM_GenBesselOrders(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(besselx::gen_bessel_orders(-60, 60, 20.0, 8.0));
}
BENCHMARK(BM_GenBesselOrders);

FieldGrid square_grid(std::size_t steps) {
  FieldGrid g;
  g.f_static = {0.0, 0.8, steps};
  g.f_rf = {0.0, 0.8, steps};
  return g;
}

void BM_ResonanceMap(benchmark::State& state) {
  const CoupledSystem sys(presets::left_resonance(), from_mhz(0.2));
  const auto grid = square_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(floquet::resonance_map(sys, from_mhz(8.0), grid, from_mhz(0.2),
                                                    static_cast<unsigned>(state.range(1))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_ResonanceMap)->Args({100, 1})->Args({100, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LzsMap(benchmark::State& state) {
  const CoupledSystem sys(presets::left_resonance(), from_mhz(0.2));
  const auto grid = square_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lzs::lzs_map(sys, from_mhz(8.0), grid, 3, static_cast<unsigned>(state.range(1))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}
BENCHMARK(BM_LzsMap)->Args({400, 1})->Args({400, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Evolve(benchmark::State& state) {
  const CoupledSystem sys(presets::left_resonance(), from_mhz(0.1));
  const FieldDrive d(0.2, 0.4581, from_mhz(8.0));
  const double t_end = static_cast<double>(state.range(0));
  timedomain::EvolveOptions opts;
  opts.stride = 4096;
  for (auto _ : state) {
    benchmark::DoNotOptimize(timedomain::evolve(sys, d, t_end, timedomain::default_step(d),
                                                timedomain::Initial::State1, opts));
  }
}
BENCHMARK(BM_Evolve)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnsembleScan(benchmark::State& state) {
  const auto model = presets::left_resonance();
  const auto pairs = ensemble::sample_ensemble(ensemble::PairGeometry{}, static_cast<std::size_t>(state.range(0)), 1);
  std::vector<double> thetas;
  for (int i = 0; i <= 90; ++i) thetas.push_back(0.5 * std::numbers::pi * i / 90.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ensemble::mixing_angle_scan(pairs, model, from_mhz(8.0), -2, thetas, 20.0,
                                                         static_cast<unsigned>(state.range(1))));
  }
}
BENCHMARK(BM_EnsembleScan)->Args({10000, 1})->Args({10000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SampleEnsemble(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ensemble::sample_ensemble(ensemble::PairGeometry{}, 100000, 1));
  }
}
BENCHMARK(BM_SampleEnsemble)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
