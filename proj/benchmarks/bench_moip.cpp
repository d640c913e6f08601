#include <benchmark/benchmark.h>

#include "moip/experiment.hpp"
#include "moip/generators.hpp"
#include "moip/relaxations.hpp"

using namespace moip;

namespace {

std::vector<ObjVec> random_points(std::size_t count) {
  auto rng = SplitMix64::stream(99, 0, 0);
  std::vector<ObjVec> pts(count, ObjVec(2));
  for (auto& p : pts) {
    p[0] = rng.uniform_real() * 100;
    p[1] = rng.uniform_real() * 100;
  }
  return pts;
}

ExperimentConfig bench_cfg(std::size_t n) {
  ExperimentConfig cfg;
  cfg.knapsack_vars = n;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

static void BM_MaxFilter(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_filter(pts));
  }
}
BENCHMARK(BM_MaxFilter)->Range(16, 1024);

static void BM_LagrangianSweep(benchmark::State& state) {
  const auto inst = gen_knapsack(bench_cfg(static_cast<std::size_t>(state.range(0))), 0);
  const MultiplierGrid grid{2.5, 11};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_approx(inst, grid));
  }
}
BENCHMARK(BM_LagrangianSweep)->DenseRange(6, 12, 3);

static void BM_SupportedFrontier(benchmark::State& state) {
  const auto inst = gen_knapsack(bench_cfg(static_cast<std::size_t>(state.range(0))), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(supported_frontier(inst));
  }
}
BENCHMARK(BM_SupportedFrontier)->DenseRange(6, 12, 3);

BENCHMARK_MAIN();
