#include <benchmark/benchmark.h>

#include "bathprobe/bayesian.hpp"
#include "bathprobe/distinguishability.hpp"
#include "bathprobe/dynamics.hpp"
#include "bathprobe/optimal_probing.hpp"

using namespace bathprobe;

static void BM_Evolve(benchmark::State& state) {
  const BathSpec bath = BathSpec::bosonic(1.0);
  const BlochVector a{0.3, -0.2, 0.5};
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(a, bath, tau));
    tau += 1e-3;
  }
}
BENCHMARK(BM_Evolve);

static void BM_Chernoff(benchmark::State& state) {
  const auto a = DensityMatrix2::from_bloch({0.3, 0.1, 0.4});
  const auto b = DensityMatrix2::from_bloch({-0.1, 0.2, -0.5});
  for (auto _ : state) benchmark::DoNotOptimize(chernoff(a, b));
}
BENCHMARK(BM_Chernoff);

static void BM_MultiCopyHelstrom(benchmark::State& state) {
  const auto pair = DiscriminationPair::from_xy(0.68, 0.41);
  const BlochVector a0 = BlochVector::pure(-0.42);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multi_copy_helstrom(pair, a0, 1.6, n));
}
BENCHMARK(BM_MultiCopyHelstrom)->DenseRange(1, kMaxCopies);

static void BM_CriticalPoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(critical_point(0.3));
}
BENCHMARK(BM_CriticalPoint);

static void BM_FullOptimize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(full_optimize(0.68, 0.41));
}
BENCHMARK(BM_FullOptimize)->Unit(benchmark::kMicrosecond);

static void BM_BruteForceOptimize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimize(0.68, 0.41, 201, 200));
}
BENCHMARK(BM_BruteForceOptimize)->Unit(benchmark::kMillisecond);

static void BM_SimulateAndDecide(benchmark::State& state) {
  const auto pair = DiscriminationPair::from_betas(0.5, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_and_decide(12345, 100, BathStatistics::Bosonic, pair, BlochVector::excited(), 0.41, 1000));
  }
}
BENCHMARK(BM_SimulateAndDecide)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
