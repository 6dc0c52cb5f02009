#include <benchmark/benchmark.h>

#include "hypergen/microdynamics.hpp"
#include "hypergen/patterns.hpp"

using namespace hypergen;

namespace {

// Heavy-tailed workload from the ranked model; n nodes, 10n edges.
TemporalHypergraph workload(std::size_t n) {
  MicroParams p;
  p.alpha = 5.0;
  p.size_sampler = SizeSampler::truncated_power_law(2, 10, 2.5);
  return simulate(RankedPopulation::sequential(n), p, 10 * n, 7).hypergraph;
}

}  // namespace

static void BM_DegreeDistribution(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(degree_distribution(h));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * h.num_edges()));
}
BENCHMARK(BM_DegreeDistribution)->Arg(1000)->Arg(10000);

static void BM_IntersectionSizes(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_size_distribution(h));
}
BENCHMARK(BM_IntersectionSizes)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_PairGroupDegree(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(group_degree_distribution(h, 2));
}
BENCHMARK(BM_PairGroupDegree)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SingularValues(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(singular_value_spectrum(h, k));
}
BENCHMARK(BM_SingularValues)->Args({1000, 10})->Args({1000, 50})->Args({5000, 50})->Unit(benchmark::kMillisecond);

static void BM_DoiSeries(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  const auto cps = evenly_spaced_checkpoints(h.num_edges(), 10);
  for (auto _ : state) benchmark::DoNotOptimize(density_of_interactions_series(h, cps));
}
BENCHMARK(BM_DoiSeries)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_TemporalLocality(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(temporal_locality(h));
}
BENCHMARK(BM_TemporalLocality)->Arg(1000)->Arg(10000);

static void BM_Persistence(benchmark::State& state) {
  const auto h = workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(persistence_interevent_distribution(h));
}
BENCHMARK(BM_Persistence)->Arg(1000)->Arg(10000);
