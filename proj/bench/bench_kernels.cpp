// Serial reference vs OpenMP kernels: mode advance, mass reduction, profile
// sampling, and a sweep of independent finite-difference runs.

#include <benchmark/benchmark.h>

#include <vector>

#include "heatswitch/fdm.hpp"
#include "heatswitch/kernels.hpp"

using namespace heatswitch;

namespace {

std::vector<ModeState> filled_modes(int K) {
  auto modes = make_modes(K, 0.05);
  for (std::size_t i = 0; i < modes.size(); ++i) modes[i].psi = 0.5 + 0.4 * ((i % 7) / 7.0);
  return modes;
}

template <void (*Advance)(std::span<ModeState>, Phase, double)>
void BM_Advance(benchmark::State& state) {
  auto modes = filled_modes(static_cast<int>(state.range(0)));
  Phase phase = Phase::Charging;
  for (auto _ : state) {
    Advance(modes, phase, 1e-3);
    phase = flipped(phase);
    benchmark::DoNotOptimize(modes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <double (*Mass)(std::span<const ModeState>, double)>
void BM_Mass(benchmark::State& state) {
  const auto modes = filled_modes(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Mass(modes, 10.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <void (*Grid)(std::span<const ModeState>, double, std::span<const double>, std::span<double>)>
void BM_Profile(benchmark::State& state) {
  const auto modes = filled_modes(64);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)) + 1), out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i) / (xs.size() - 1);
  for (auto _ : state) {
    Grid(modes, 10.0, xs, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_FdmSweep(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  std::vector<FdmConfig> cfgs;
  std::vector<PhysicalParams> params;
  for (int i = 0; i < 8; ++i) {
    cfgs.push_back(FdmConfig{50 + 25 * i, 0.02, 20.0, 100000});
    params.push_back(PhysicalParams{0.05, 10.0, 7.0, 3.0});
  }
  for (auto _ : state) benchmark::DoNotOptimize(run_fdm_sweep(cfgs, params, parallel));
}

}  // namespace

BENCHMARK(BM_Advance<kernels::advance_serial>)->Arg(64)->Arg(4096)->Arg(1 << 18);
BENCHMARK(BM_Advance<kernels::advance_parallel>)->Arg(64)->Arg(4096)->Arg(1 << 18);
BENCHMARK(BM_Mass<kernels::mass_serial>)->Arg(64)->Arg(4096)->Arg(1 << 18);
BENCHMARK(BM_Mass<kernels::mass_parallel>)->Arg(64)->Arg(4096)->Arg(1 << 18);
BENCHMARK(BM_Profile<kernels::profile_grid_serial>)->Arg(50)->Arg(2000);
BENCHMARK(BM_Profile<kernels::profile_grid_parallel>)->Arg(50)->Arg(2000);
BENCHMARK(BM_FdmSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
