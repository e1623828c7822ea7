#include <benchmark/benchmark.h>

#include "qgen/diagrams.hpp"
#include "qgen/fixed_spaces.hpp"
#include "qgen/gencheck.hpp"

using namespace qgen;

static void BM_EnumerateNCPartitions(benchmark::State& state) {
  const auto w = ColoredWord::uncolored(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(DiagramFamily::NCPartitions, w));
}
BENCHMARK(BM_EnumerateNCPartitions)->DenseRange(4, 10, 2);

static void BM_EnumerateAllPairings(benchmark::State& state) {
  const auto w = ColoredWord::uncolored(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(DiagramFamily::AllPairings, w));
}
BENCHMARK(BM_EnumerateAllPairings)->DenseRange(4, 10, 2);

static void BM_GramRank(benchmark::State& state) {
  const auto w = ColoredWord::uncolored(static_cast<std::size_t>(state.range(0)));
  const auto list = enumerate(DiagramFamily::NCPairings, w);
  for (auto _ : state) benchmark::DoNotOptimize(rank(gram_matrix(list, Dimension(2))));
}
BENCHMARK(BM_GramRank)->DenseRange(4, 10, 2);

static void BM_DimSpanPartitions(benchmark::State& state) {
  const auto w = ColoredWord::uncolored(static_cast<std::size_t>(state.range(0)));
  const auto space = fixed_space(GroupSpec{GroupFamily::ClassicalS, Dimension(3)}, w);
  for (auto _ : state) benchmark::DoNotOptimize(dim_span(space));
}
BENCHMARK(BM_DimSpanPartitions)->DenseRange(3, 6);

static void BM_IntersectOrthogonalTorus(benchmark::State& state) {
  const auto w = ColoredWord::uncolored(static_cast<std::size_t>(state.range(0)));
  const auto classical = fixed_space(GroupSpec{GroupFamily::ClassicalO, Dimension(3)}, w);
  const auto torus = fixed_space(GroupSpec{GroupFamily::TorusFreeZ2, Dimension(3)}, w);
  for (auto _ : state) benchmark::DoNotOptimize(dim_intersection(classical, torus));
}
BENCHMARK(BM_IntersectOrthogonalTorus)->DenseRange(4, 8, 2);

static void BM_LowerRankCheck(benchmark::State& state) {
  GenerationTask task{.name = "bench",
                      .target = GroupSpec{GroupFamily::FreeU, Dimension(3)},
                      .subgroups = {GroupSpec{GroupFamily::ClassicalU, Dimension(3)},
                                    GroupSpec{GroupFamily::EmbeddedFreeULower, Dimension(3)}},
                      .max_len = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_generation_check(task));
}
BENCHMARK(BM_LowerRankCheck)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
