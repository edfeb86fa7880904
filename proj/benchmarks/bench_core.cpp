#include <benchmark/benchmark.h>

#include "idealtop/search.hpp"
#include "idealtop/star.hpp"
#include "idealtop/theorems.hpp"

using namespace idealtop;

static void BM_EnumerateTopologies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(n));
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_LocalFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IdealSpace s(enumerate_topologies(n).back(), Ideal(n, SubsetMask::singleton(0)));
  for (auto _ : state)
    for_each_subset(n, [&](SubsetMask a) { benchmark::DoNotOptimize(local_function(s, a)); });
}
BENCHMARK(BM_LocalFunction)->DenseRange(2, 5);

static void BM_AnalyzeSpace(benchmark::State& state) {
  const auto tops = enumerate_topologies(4);
  size_t i = 0;
  for (auto _ : state) {
    AnalyzedSpace a(IdealSpace(tops[i++ % tops.size()], Ideal(4, SubsetMask::of({1, 2}))));
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AnalyzeSpace);

static void BM_VerifyTheorem(benchmark::State& state) {
  const auto id = kAllTheorems[state.range(0)];
  SearchBounds b;
  b.max_n_dom = b.max_n_cod = 2;
  for (auto _ : state) benchmark::DoNotOptimize(verify_exhaustive(id, b));
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(0, static_cast<int>(kAllTheorems.size()) - 1)->Unit(benchmark::kMillisecond);

static void BM_VerifyTc1AtThree(benchmark::State& state) {
  SearchBounds b;
  b.min_n_dom = b.min_n_cod = 3;
  for (auto _ : state) benchmark::DoNotOptimize(verify_exhaustive(TheoremId::TC1, b));
}
BENCHMARK(BM_VerifyTc1AtThree)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
