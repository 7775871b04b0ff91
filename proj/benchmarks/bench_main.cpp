#include <benchmark/benchmark.h>

#include "tgc/catalog.hpp"
#include "tgc/colored_graph.hpp"
#include "tgc/sde.hpp"
#include "tgc/tutte.hpp"
#include "tgc/ytable.hpp"

namespace {

using namespace tgc;

void BM_CanonicalCode(benchmark::State& state) {
  auto word = parse_word("m|m|V1|V1|K33");
  ColoredGraph g = disjoint_union(word, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode);

void BM_AutomorphismGroup(benchmark::State& state) {
  auto word = parse_word("m|m|V1|V1|K33");
  ColoredGraph g = disjoint_union(word, 3);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).size());
}
BENCHMARK(BM_AutomorphismGroup);

void BM_ConnectedClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(connected_classes(3, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_ConnectedClasses)->DenseRange(2, 4);

void BM_GenerateSde(benchmark::State& state) {
  const char* specs[] = {"m|m", "m|m|m", "V1|m", "K33|m"};
  auto word = parse_word(specs[state.range(0)]);
  for (auto _ : state) {
    Equation eq = generate_sde(word, {0, 0});
    benchmark::DoNotOptimize(canonical_key(eq.rhs));
  }
  state.SetLabel(specs[state.range(0)]);
}
BENCHMARK(BM_GenerateSde)->DenseRange(0, 3);

void BM_ExpandY(benchmark::State& state) {
  Equation eq = generate_sde(parse_word("m|m"), {0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(y_expand(eq.rhs)));
}
BENCHMARK(BM_ExpandY);

void BM_TutteTable(benchmark::State& state) {
  for (auto _ : state) {
    GenFunTable table(static_cast<int>(state.range(0)), 4);
    benchmark::DoNotOptimize(table.get(1, {2, 2}).terms().size());
  }
}
BENCHMARK(BM_TutteTable)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_BruteForceMaps(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_genus_profile({4}, {0, static_cast<int>(state.range(0))}).size());
}
BENCHMARK(BM_BruteForceMaps)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
