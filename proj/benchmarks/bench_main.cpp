#include <benchmark/benchmark.h>

#include <random>

#include "triolab/classify.hpp"
#include "triolab/graphs.hpp"
#include "triolab/octahedral.hpp"

using namespace triolab;

static void BM_Product(benchmark::State& st) {
  const auto g = parse_group(st.range(0) == 0 ? "C2xS4" : "A5");
  std::mt19937_64 rng(1);
  const Mask a = rng() & g.full(), b = rng() & g.full();
  for (auto _ : st) benchmark::DoNotOptimize(g.product(a, b));
}
BENCHMARK(BM_Product)->Arg(0)->Arg(1);

static void BM_Subgroups(benchmark::State& st) {
  const auto g = parse_group("C2xS4");
  for (auto _ : st) benchmark::DoNotOptimize(subgroups(g).size());
}
BENCHMARK(BM_Subgroups)->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& st) {
  const auto g = parse_group(catalog_upto12()[st.range(0)]);
  st.SetLabel(g.label());
  for (auto _ : st) benchmark::DoNotOptimize(brute_maximal_critical_trios(g).size());
}
BENCHMARK(BM_Census)->Arg(12)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_ClassifyD6(benchmark::State& st) {
  const auto g = parse_group("D6");
  const auto trios = brute_maximal_critical_trios(g);
  for (auto _ : st)
    for (const auto& t : trios) benchmark::DoNotOptimize(classify_trio(g, t).tag);
  st.SetItemsProcessed(st.iterations() * static_cast<long>(trios.size()));
}
BENCHMARK(BM_ClassifyD6)->Unit(benchmark::kMillisecond);

static void BM_SmallCuts(benchmark::State& st) {
  const auto g = named_graph(st.range(0) == 0 ? "Petersen" : "Icosahedron");
  st.SetLabel(g.name);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_small_cuts(g).size());
}
BENCHMARK(BM_SmallCuts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_OctC2(benchmark::State& st) {
  const auto h = cyclic_group(2);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_maximal_critical(h).size());
}
BENCHMARK(BM_OctC2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
