#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rphouse/rphouse.hpp"

namespace {

using namespace rphouse;

RMatrix random_r(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) entries[static_cast<size_t>(i) * n + j] = dist(rng);
    }
  }
  return RMatrix(n, std::move(entries));
}

CostMatrix random_cost(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> entries(static_cast<size_t>(n) * n);
  for (double& e : entries) e = dist(rng);
  return CostMatrix(n, std::move(entries));
}

void BM_MinCostAssignment(benchmark::State& state) {
  const CostMatrix costs = random_cost(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cost_assignment(costs));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinCostAssignment)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_BottleneckAssignment(benchmark::State& state) {
  const CostMatrix costs = random_cost(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bottleneck_assignment(costs));
  }
}
BENCHMARK(BM_BottleneckAssignment)->RangeMultiplier(2)->Range(8, 128);

void BM_CyclicalConsistency(benchmark::State& state) {
  const RMatrix r = random_r(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_cyclical_consistency(r));
  }
}
BENCHMARK(BM_CyclicalConsistency)->RangeMultiplier(4)->Range(8, 512);

void BM_FindCertificate(benchmark::State& state) {
  // Nonnegative entries keep the matrix consistent, so the LP path runs.
  std::mt19937 rng(4);
  const int n = static_cast<int>(state.range(0));
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> entries(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) entries[static_cast<size_t>(i) * n + j] = dist(rng);
    }
  }
  const RMatrix r(n, std::move(entries));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_certificate(r));
  }
}
BENCHMARK(BM_FindCertificate)->DenseRange(4, 16, 4);

void BM_IndexA(benchmark::State& state) {
  const RMatrix r = random_r(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_a(r));
  }
}
BENCHMARK(BM_IndexA)->DenseRange(3, 12, 3);

void BM_IndexG(benchmark::State& state) {
  const RMatrix r = random_r(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_g(r));
  }
}
BENCHMARK(BM_IndexG)->DenseRange(3, 9, 3);

void BM_TopTradingCycles(benchmark::State& state) {
  const CostMatrix costs = random_cost(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(top_trading_cycles(costs));
  }
}
BENCHMARK(BM_TopTradingCycles)->RangeMultiplier(4)->Range(8, 512);

}  // namespace

BENCHMARK_MAIN();
