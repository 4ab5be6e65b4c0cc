#include <benchmark/benchmark.h>

#include "regulus/corpus.hpp"
#include "regulus/functors.hpp"
#include "regulus/genus.hpp"
#include "regulus/language.hpp"
#include "regulus/relation.hpp"
#include "regulus/search.hpp"

using namespace regulus;

namespace {

UndirectedGraph complete(int n) {
  UndirectedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge("e" + std::to_string(i) + "_" + std::to_string(j), i, j);
  return g;
}

void BM_GenusComplete(benchmark::State& state) {
  UndirectedGraph g = complete(static_cast<int>(state.range(0)));
  GenusOptions opt;
  opt.force = true;
  for (auto _ : state) benchmark::DoNotOptimize(genus_exact(g, opt).genus);
}
BENCHMARK(BM_GenusComplete)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Planarity(benchmark::State& state) {
  DiGraph g = language_graph(corpus_automaton("z7-123"));
  UndirectedGraph u = forget(g);
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(u).planar);
}
BENCHMARK(BM_Planarity);

void BM_MinimizeCyclic(benchmark::State& state) {
  // n-state sum language over {1,2,3}, already minimal
  const int n = static_cast<int>(state.range(0));
  Automaton a = cyclic_sum_automaton(n, {1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(minimize(a).amin.graph().num_vertices());
  state.SetComplexityN(n);
}
BENCHMARK(BM_MinimizeCyclic)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_MinimizeUnrolled(benchmark::State& state) {
  Automaton a = corpus_automaton("z6-unrolled12");
  for (auto _ : state) benchmark::DoNotOptimize(minimize(a).amin.graph().num_vertices());
}
BENCHMARK(BM_MinimizeUnrolled);

void BM_MaximumRelation(benchmark::State& state) {
  DiGraph g = language_graph(cyclic_sum_automaton(static_cast<int>(state.range(0)), {1, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(maximum(g).vertices.num_blocks());
}
BENCHMARK(BM_MaximumRelation)->RangeMultiplier(2)->Range(8, 128);

void BM_SearchZ7Planar(benchmark::State& state) {
  // every fibre vector is rejected by the Euler bound
  LanguageTarget t = language_target(corpus_automaton("z7-123"));
  CoverSearchSpec s;
  s.base = t.target;
  s.max_fiber = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_covers(s).outcome);
}
BENCHMARK(BM_SearchZ7Planar)->DenseRange(1, 4);

void BM_SearchZ7Genus1(benchmark::State& state) {
  LanguageTarget t = language_target(corpus_automaton("z7-123"));
  CoverSearchSpec s;
  s.base = t.target;
  s.genus_bound = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search_covers(s).outcome);
}
BENCHMARK(BM_SearchZ7Genus1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
