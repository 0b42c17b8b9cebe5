#include <benchmark/benchmark.h>

#include "colred/colred.hpp"

namespace {

using namespace colred;

void BM_StepConstructTwelve(benchmark::State& state) {
  const ImplicitAlgorithm alg(construct(12));
  const ColouredGraph g = random_distinct(Topology::cycle, static_cast<std::size_t>(state.range(0)),
                                          parse_big("10^100"), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(g, alg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StepConstructTwelve)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DefaultChain(benchmark::State& state) {
  const auto chain = default_chain();
  const ColouredGraph g = random_distinct(Topology::path, static_cast<std::size_t>(state.range(0)),
                                          parse_big("10^100"), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_chain(g, chain));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DefaultChain)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FirstDisjointFastPath(benchmark::State& state) {
  const Collection collection = construct(static_cast<int>(state.range(0)));
  const Construction& rule = *collection.construction();
  const auto a = rule.label(pow2(100) + 17);
  const auto b = rule.label(pow2(200) + 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rule.first_disjoint(a, b));
  }
}
BENCHMARK(BM_FirstDisjointFastPath)->Arg(12)->Arg(16);

void BM_FirstDisjointGeneric(benchmark::State& state) {
  const Collection collection = construct(8);
  const Family a = collection.family_at(40);
  const Family b = collection.family_at(90);
  for (auto _ : state) {
    benchmark::DoNotOptimize(first_disjoint_pair(a, b));
  }
}
BENCHMARK(BM_FirstDisjointGeneric);

void BM_Tabulate(benchmark::State& state) {
  const ImplicitAlgorithm alg(construct(6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tabulate(alg, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Tabulate)->Arg(12)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_MaxColourful(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_colourful(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_MaxColourful)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
