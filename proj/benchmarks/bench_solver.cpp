#include <benchmark/benchmark.h>

#include "aprel/dpll_rel.hpp"
#include "aprel/generators.hpp"

using namespace aprel;

namespace {

std::vector<ClauseId> negative_clauses(const ClauseSet& set) {
  std::vector<ClauseId> out;
  for (const auto& c : set) {
    auto lits = c.literals();
    if (std::none_of(lits.begin(), lits.end(), [](const Literal& l) { return l.positive; })) out.push_back(c.id());
  }
  return out;
}

// Unsat core over a few atoms padded with a satisfiable tail.
ClauseSet padded(int tail_atoms) {
  Rng rng(3);
  return core_and_tail(rng, 10, tail_atoms, static_cast<std::size_t>(3 * tail_atoms));
}

void BM_Dpll(benchmark::State& state) {
  auto set = padded(static_cast<int>(state.range(0)));
  auto q = to_prop(set);
  std::uint64_t calls = 0;
  for (auto _ : state) calls = dpll(q).stats.calls;
  state.counters["calls"] = static_cast<double>(calls);
}
BENCHMARK(BM_Dpll)->Arg(40)->Arg(200)->Arg(1000);

void BM_DpllRel(benchmark::State& state) {
  auto set = padded(static_cast<int>(state.range(0)));
  auto problem = prepare_relevance(set, negative_clauses(set));
  std::uint64_t calls = 0;
  for (auto _ : state) calls = dpll_rel(problem.cnf, problem.steps, RelMode::fallback).stats.calls;
  state.counters["calls"] = static_cast<double>(calls);
}
BENCHMARK(BM_DpllRel)->Arg(40)->Arg(200)->Arg(1000);

void BM_PrepareRelevance(benchmark::State& state) {
  auto set = padded(static_cast<int>(state.range(0)));
  auto u = negative_clauses(set);
  for (auto _ : state) benchmark::DoNotOptimize(prepare_relevance(set, u));
}
BENCHMARK(BM_PrepareRelevance)->Arg(40)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
