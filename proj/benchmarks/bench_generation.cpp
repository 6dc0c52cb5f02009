#include <benchmark/benchmark.h>

#include "hypergen/engine.hpp"
#include "hypergen/microdynamics.hpp"

using namespace hypergen;

static void BM_Simulate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto edges = static_cast<std::size_t>(state.range(1));
  MicroParams p;
  p.alpha = 5.0;
  p.size_sampler = SizeSampler::fixed(3);
  const auto pop = RankedPopulation::sequential(n);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(pop, p, edges, ++seed));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * edges));
}
BENCHMARK(BM_Simulate)->Args({1000, 20000})->Args({10000, 100000})->Unit(benchmark::kMillisecond);

static void BM_ConstructOracle(benchmark::State& state) {
  GenerationConfig c;
  c.num_nodes = static_cast<std::size_t>(state.range(0));
  c.target_edges = static_cast<std::size_t>(state.range(1));
  c.attach_probability = 0.85;
  const auto profiles = synthetic_profiles(c.num_nodes);
  for (auto _ : state) {
    OracleBackend backend(population_from_profiles(profiles), oracle_params(c), oracle_settings(c));
    benchmark::DoNotOptimize(construct(profiles, c, backend));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.target_edges));
}
BENCHMARK(BM_ConstructOracle)->Args({500, 5000})->Args({2000, 20000})->Unit(benchmark::kMillisecond);

static void BM_EvolveStepOracle(benchmark::State& state) {
  GenerationConfig c;
  c.num_nodes = 500;
  c.target_edges = static_cast<std::size_t>(state.range(0));
  const auto profiles = synthetic_profiles(c.num_nodes);
  OracleBackend backend(population_from_profiles(profiles), oracle_params(c), oracle_settings(c));
  EvolutionState s0;
  s0.graph = construct(profiles, c, backend).graph;
  for (auto _ : state) benchmark::DoNotOptimize(evolve_step(s0, backend, profiles, c));
}
BENCHMARK(BM_EvolveStepOracle)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
