#include <benchmark/benchmark.h>

#include "kcover/automorphisms.h"
#include "kcover/covering.h"
#include "kcover/experiments.h"
#include "kcover/graph_io.h"
#include "kcover/kronecker.h"

namespace {

using namespace kcover;

void BM_AutomorphismsDesargues(benchmark::State& state) {
  const Graph d = desargues();
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(d).size());
}
BENCHMARK(BM_AutomorphismsDesargues);

void BM_AutomorphismsHypercube(benchmark::State& state) {
  const Graph q = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(q).size());
}
BENCHMARK(BM_AutomorphismsHypercube)->DenseRange(2, 5);

void BM_QuotientCensusDesargues(benchmark::State& state) {
  const Graph d = desargues();
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_quotients(d).classes.size());
}
BENCHMARK(BM_QuotientCensusDesargues);

void BM_CoverSearchDesarguesOverPetersen(benchmark::State& state) {
  const Graph d = desargues(), p = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(search_covering_map(d, p).has_value());
}
BENCHMARK(BM_CoverSearchDesarguesOverPetersen);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = generalized_petersen(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)).size());
}
BENCHMARK(BM_Graph6RoundTrip)->Range(8, 512);

void BM_ReproduceTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_theorem().all_passed());
}
BENCHMARK(BM_ReproduceTheorem)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
