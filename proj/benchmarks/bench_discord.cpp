#include <benchmark/benchmark.h>

#include "qdiscord/optimizer.hpp"

using namespace qdiscord;

namespace {

const XState& rho1() {
  static const XState s = XState::from_entries(0.027180, 0.000224, 0.027327, 0.945269, 0.141651, 0);
  return s;
}

void BM_ConditionalEntropyPovm3(benchmark::State& state) {
  const BlochParams p = bloch_params(rho1());
  const Povm3 povm = build_povm3(PovmWeights::make(0.4209, 0.2938, 0.2853), {0.7, 1.5, 2.1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_entropy_povm3(p, povm, LogBase::bits));
  }
}
BENCHMARK(BM_ConditionalEntropyPovm3);

void BM_BuildPovm3(benchmark::State& state) {
  const PovmWeights w = PovmWeights::make(0.4209, 0.2938, 0.2853);
  double psi = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_povm3(w, {psi, 1.5, 2.1}));
    psi += 1e-3;
  }
}
BENCHMARK(BM_BuildPovm3);

void BM_MinimizeProjective(benchmark::State& state) {
  SearchConfig cfg;
  cfg.angle_grid = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_projective(rho1(), cfg, LogBase::bits).best_value);
  }
}
BENCHMARK(BM_MinimizeProjective)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_MinimizePovm3(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n_global_samples = static_cast<int>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_povm3(rho1(), cfg, LogBase::bits).best_value);
  }
}
BENCHMARK(BM_MinimizePovm3)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
