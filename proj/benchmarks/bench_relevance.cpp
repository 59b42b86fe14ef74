#include <benchmark/benchmark.h>

#include "aprel/distance.hpp"
#include "aprel/generators.hpp"
#include "aprel/link_index.hpp"

using namespace aprel;

namespace {

std::vector<ClauseId> first_clause(const ClauseSet& set) { return {set[0].id()}; }

void BM_BuildGraph(benchmark::State& state, GraphMode mode) {
  auto set = hub_fixture(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto graph = build_graph(set, mode);
    benchmark::DoNotOptimize(graph.edge_count());
  }
  state.counters["edges"] = static_cast<double>(build_graph(set, mode).edge_count());
}
BENCHMARK_CAPTURE(BM_BuildGraph, first_order, GraphMode::first_order)->Arg(50)->Arg(200);
BENCHMARK_CAPTURE(BM_BuildGraph, hub, GraphMode::propositional_hub)->Arg(50)->Arg(200);

void BM_FullSearch(benchmark::State& state) {
  Rng rng(7);
  auto set = random_ksat(rng, static_cast<int>(state.range(0) / 4), static_cast<std::size_t>(state.range(0)));
  auto graph = build_graph(set, GraphMode::propositional_hub);
  auto u = first_clause(set);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_from_support(graph, u));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FullSearch)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

// A sparse 1e5-clause set where the bounded search sees a small region.
void BM_BoundedSearch(benchmark::State& state) {
  Rng rng(11);
  auto set = std::make_shared<const ClauseSet>(random_ksat(rng, 60000, 100000, 2));
  auto index = std::make_shared<LinkIndex>(set);
  auto u = first_clause(*set);
  auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_build_and_search(index, u, k, GraphMode::propositional_hub));
  }
}
BENCHMARK(BM_BoundedSearch)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FullBuildAndSearch(benchmark::State& state) {
  Rng rng(11);
  auto set = random_ksat(rng, 60000, 100000, 2);
  auto u = first_clause(set);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs_from_support(build_graph(set, GraphMode::propositional_hub), u));
  }
}
BENCHMARK(BM_FullBuildAndSearch)->Unit(benchmark::kMillisecond);

}  // namespace
