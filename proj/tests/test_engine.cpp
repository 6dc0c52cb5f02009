#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "hypergen/engine.hpp"
#include "hypergen/error.hpp"
#include "hypergen/patterns.hpp"
#include "hypergen/text.hpp"

using namespace hypergen;

namespace {

// Oracle decisions with optional overrides, for failure injection.
class ScriptedBackend : public AgentBackend {
 public:
  explicit ScriptedBackend(OracleBackend inner) : inner_(std::move(inner)) {}

  std::function<void()> before_generate;
  std::function<void()> before_optimize;
  std::function<RemovalDecision(const RemoverContext&)> remover;
  std::size_t generate_calls = 0;

  CandidateHyperedge generate(const GeneratorContext& ctx, std::uint64_t seed) override {
    ++generate_calls;
    if (before_generate) before_generate();
    return inner_.generate(ctx, seed);
  }
  ReviewDecision review(const ReviewerContext& ctx, std::uint64_t seed) override { return inner_.review(ctx, seed); }
  RemovalDecision remove(const RemoverContext& ctx, std::uint64_t seed) override {
    return remover ? remover(ctx) : inner_.remove(ctx, seed);
  }
  StrategyDirective optimize(const OptimizerContext& ctx, std::uint64_t seed) override {
    if (before_optimize) before_optimize();
    return inner_.optimize(ctx, seed);
  }

 private:
  OracleBackend inner_;
};

GenerationConfig small_config() {
  GenerationConfig c;
  c.num_nodes = 80;
  c.target_edges = 300;
  c.max_edge_size = 5;
  return c;
}

OracleBackend oracle_for(const std::vector<EntityProfile>& profiles, const GenerationConfig& c) {
  return OracleBackend(population_from_profiles(profiles), oracle_params(c), oracle_settings(c));
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double tv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += 0.5 * std::abs(a[i] - b[i]);
  return tv;
}

}  // namespace

TEST(GenerationConfig, ParseSerializeRoundTrip) {
  auto c = parse_generation_config(
      "# comment\nnum_nodes = 120\nattach_probability=0.6\nbackend=remote\nsize_spec=2:0.5,4:0.5\n\n"
      "domain_label=chemistry lab\nseed=9\n");
  EXPECT_EQ(c.num_nodes, 120u);
  EXPECT_EQ(c.attach_probability, 0.6);
  EXPECT_EQ(c.backend, BackendKind::kRemote);
  ASSERT_TRUE(c.size_spec);
  EXPECT_EQ(c.size_spec->sizes(), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(c.domain_label, "chemistry lab");
  auto back = parse_generation_config(serialize_generation_config(c));
  EXPECT_EQ(serialize_generation_config(back), serialize_generation_config(c));
  EXPECT_EQ(back.seed, 9u);
}

TEST(GenerationConfig, RejectsBadInput) {
  EXPECT_THROW(parse_generation_config("bogus_key=1\n"), ParseError);
  EXPECT_THROW(parse_generation_config("num_nodes=-3\n"), ParseError);
  EXPECT_THROW(parse_generation_config("backend=cloud\n"), ParseError);
  EXPECT_THROW(parse_generation_config("no equals sign\n"), ParseError);
  GenerationConfig c;
  c.attach_probability = 1.5;
  EXPECT_THROW(c.validate(), InvalidArgumentError);
  c = GenerationConfig{};
  c.min_edge_size = 6;
  c.max_edge_size = 3;
  EXPECT_THROW(c.validate(), InvalidArgumentError);
  c = GenerationConfig{};
  c.remove_fraction = -0.1;
  EXPECT_THROW(c.validate(), InvalidArgumentError);
}

TEST(Population, RankAttributeOrProfileOrder) {
  auto p = parse_profiles("5,rank=2\n6,rank=1\n7,rank=3\n");
  auto pop = population_from_profiles(p);
  EXPECT_EQ(pop.ranks(), (std::vector<std::size_t>{2, 1, 3}));
  auto bad = parse_profiles("5,rank=2\n6,rank=2\n7,rank=3\n");
  EXPECT_EQ(population_from_profiles(bad).ranks(), (std::vector<std::size_t>{1, 2, 3}));
  auto none = parse_profiles("5,a=1\n6\n");
  EXPECT_EQ(population_from_profiles(none).ranks(), (std::vector<std::size_t>{1, 2}));
}

TEST(SelectEntity, UniformWhenAttachProbabilityZero) {
  TemporalHypergraph h;
  for (NodeId v = 0; v < 5; ++v) h.add_node(v);
  for (int i = 0; i < 20; ++i) h.add_hyperedge({0, 1});
  GenerationConfig c;
  c.attach_probability = 0.0;
  Rng rng(1);
  std::vector<double> freq(5, 0.0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) freq[select_entity(h, c, nullptr, rng)] += 1.0 / draws;
  EXPECT_LT(total_variation(freq, std::vector<double>(5, 0.2)), 0.02);
}

TEST(SelectEntity, PreferentialOnDegreePlusOne) {
  TemporalHypergraph h;
  for (NodeId v = 0; v < 4; ++v) h.add_node(v);
  for (int i = 0; i < 6; ++i) h.add_hyperedge({0, 1});
  h.add_hyperedge({2});
  GenerationConfig c;
  c.attach_probability = 1.0;
  Rng rng(2);
  std::vector<double> freq(4, 0.0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) freq[select_entity(h, c, nullptr, rng)] += 1.0 / draws;
  // degrees 6, 6, 1, 0 -> weights 7, 7, 2, 1 over 17.
  EXPECT_LT(total_variation(freq, {7 / 17.0, 7 / 17.0, 2 / 17.0, 1 / 17.0}), 0.02);
}

TEST(SelectEntity, FocusEntitiesPreferred) {
  TemporalHypergraph h;
  for (NodeId v = 0; v < 10; ++v) h.add_node(v);
  GenerationConfig c;
  c.attach_probability = 0.0;
  c.focus_bias = 0.5;
  StrategyDirective d{DirectiveKind::kIncreaseConnections, {3, 99}, ""};  // 99 is not in V
  Rng rng(3);
  int hits = 0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) hits += select_entity(h, c, &d, rng) == 3;
  EXPECT_NEAR(hits / double(draws), 0.5 + 0.5 / 10, 0.015);
  TemporalHypergraph empty;
  EXPECT_THROW(select_entity(empty, c, nullptr, rng), InvalidArgumentError);
}

TEST(HyperedgeSize, MatchesConfiguredDistribution) {
  GenerationConfig c;
  c.min_edge_size = 2;
  c.max_edge_size = 6;
  c.size_exponent = 2.0;
  Rng rng(4);
  std::vector<double> expected(5), freq(5, 0.0);
  double z = 0;
  for (int k = 2; k <= 6; ++k) z += 1.0 / (k * k);
  for (int k = 2; k <= 6; ++k) expected[k - 2] = 1.0 / (k * k) / z;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) freq[determine_hyperedge_size(c, rng) - 2] += 1.0 / draws;
  EXPECT_LT(total_variation(freq, expected), 0.02);
  c.size_spec = SizeSampler::discrete({3}, {1.0});
  EXPECT_EQ(determine_hyperedge_size(c, rng), 3u);
}

TEST(ValidateCandidate, Reasons) {
  TemporalHypergraph h;
  for (NodeId v = 0; v < 6; ++v) h.add_node(v);
  h.add_hyperedge({1, 2});
  GenerationConfig c;
  c.min_edge_size = 2;
  c.max_edge_size = 3;
  EXPECT_TRUE(validate_candidate({{0, 1}, 0, ""}, h, c).accepted);
  EXPECT_EQ(validate_candidate({{0, 9}, 0, ""}, h, c).reason, "unknown node");
  EXPECT_EQ(validate_candidate({{0}, 0, ""}, h, c).reason, "size");
  EXPECT_EQ(validate_candidate({{0, 1, 2, 3}, 0, ""}, h, c).reason, "size");
  EXPECT_EQ(validate_candidate({{1, 3}, 0, ""}, h, c).reason, "center");
  EXPECT_EQ(validate_candidate({{1, 2}, 1, ""}, h, c).reason, "duplicate");
  c.duplicate_window = 0;
  EXPECT_TRUE(validate_candidate({{1, 2}, 1, ""}, h, c).accepted);
}

TEST(Construct, BookkeepingAndTimestamps) {
  auto c = small_config();
  auto profiles = synthetic_profiles(c.num_nodes);
  auto backend = oracle_for(profiles, c);
  auto r = construct(profiles, c, backend);
  EXPECT_EQ(r.attempts, c.target_edges);
  EXPECT_EQ(r.accepted + r.discarded, r.attempts);
  EXPECT_EQ(r.graph.num_edges(), r.accepted);
  EXPECT_EQ(r.graph.num_nodes(), c.num_nodes);
  EXPECT_TRUE(r.aborted_reason.empty());
  EXPECT_GT(r.accepted, c.target_edges * 9 / 10);
  for (std::size_t i = 0; i < r.graph.num_edges(); ++i) {
    EXPECT_EQ(r.graph.edge(i).timestamp, i);
    EXPECT_GE(r.graph.edge(i).size(), c.min_edge_size);
    EXPECT_LE(r.graph.edge(i).size(), c.max_edge_size);
  }
}

TEST(Construct, DeterministicForSeed) {
  auto c = small_config();
  auto profiles = synthetic_profiles(c.num_nodes);
  auto b1 = oracle_for(profiles, c), b2 = oracle_for(profiles, c);
  auto r1 = construct(profiles, c, b1), r2 = construct(profiles, c, b2);
  EXPECT_EQ(r1.graph, r2.graph);
  c.seed = 43;
  auto b3 = oracle_for(profiles, c);
  EXPECT_NE(construct(profiles, c, b3).graph, r1.graph);
}

TEST(Construct, BackendFailureAbortsWithPartialResult) {
  auto c = small_config();
  auto profiles = synthetic_profiles(c.num_nodes);
  ScriptedBackend backend(oracle_for(profiles, c));
  backend.before_generate = [&] {
    if (backend.generate_calls == 50) throw TransportError("endpoint down");
  };
  auto r = construct(profiles, c, backend);
  EXPECT_EQ(r.attempts, 50u);
  EXPECT_NE(r.aborted_reason.find("endpoint down"), std::string::npos);
  EXPECT_EQ(r.graph.num_edges(), r.accepted);
  EXPECT_LT(r.accepted, 50u);
}

TEST(Construct, UnparsableAnswersAreDiscarded) {
  auto c = small_config();
  auto profiles = synthetic_profiles(c.num_nodes);
  ScriptedBackend backend(oracle_for(profiles, c));
  backend.before_generate = [&] {
    if (backend.generate_calls % 3 == 0) throw ParseError("no ids");
  };
  auto r = construct(profiles, c, backend);
  EXPECT_TRUE(r.aborted_reason.empty());
  EXPECT_GE(r.discarded, c.target_edges / 3);
  EXPECT_EQ(r.accepted + r.discarded, r.attempts);
}

TEST(Evolve, EdgeCountBookkeepingEveryStep) {
  auto c = small_config();
  c.evolution_steps = 20;
  c.quality_threshold = 0.3;  // gives the remover something to prune
  c.remove_fraction = 0.1;
  auto profiles = synthetic_profiles(c.num_nodes);
  auto backend = oracle_for(profiles, c);
  auto h0 = construct(profiles, c, backend).graph;
  auto res = evolve(h0, profiles, c, backend);
  ASSERT_EQ(res.state.history.size(), 20u);
  std::size_t m = h0.num_edges(), removed = 0;
  for (const auto& s : res.state.history) {
    EXPECT_EQ(s.edges_before, m);
    EXPECT_EQ(s.edges_after, m - s.removed + s.accepted) << "step " << s.step;
    EXPECT_LE(s.removed, static_cast<std::size_t>(c.remove_fraction * static_cast<double>(m)));
    EXPECT_EQ(s.proposed, c.generation_attempts_per_step);
    EXPECT_EQ(s.accepted + s.rejected + s.discarded, s.proposed);
    EXPECT_EQ(s.optimizer_calls, 1u);
    m = s.edges_after;
    removed += s.removed;
  }
  EXPECT_EQ(res.state.graph.num_edges(), m);
  EXPECT_EQ(res.state.total_removed, removed);
  EXPECT_GT(removed, 0u);
  EXPECT_EQ(res.report.entries.size(), 8u);

  auto csv = counters_csv(res.state);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
  EXPECT_TRUE(csv.starts_with("step,edges_before,removed,"));
}

TEST(Evolve, MergedEdgesGetFreshTimestamps) {
  auto c = small_config();
  auto profiles = synthetic_profiles(c.num_nodes);
  auto backend = oracle_for(profiles, c);
  auto h0 = construct(profiles, c, backend).graph;
  EvolutionState s0;
  s0.graph = h0;
  auto s1 = evolve_step(s0, backend, profiles, c);
  for (std::size_t i = h0.num_edges(); i < s1.graph.num_edges(); ++i)
    EXPECT_EQ(s1.graph.edge(i).timestamp, h0.max_timestamp() + 1 + (i - h0.num_edges()));
}

TEST(Evolve, RemoverCapEnforcedAgainstGreedyBackend) {
  auto c = small_config();
  c.remove_fraction = 0.05;
  auto profiles = synthetic_profiles(c.num_nodes);
  ScriptedBackend backend(oracle_for(profiles, c));
  backend.remover = [](const RemoverContext& ctx) {
    RemovalDecision d;
    for (EdgeIndex i = 0; i < ctx.graph->num_edges() + 5; ++i) d.indices.push_back(i);  // includes invalid ones
    return d;
  };
  EvolutionState s0;
  s0.graph = construct(profiles, c, backend).graph;
  auto s1 = evolve_step(s0, backend, profiles, c);
  EXPECT_EQ(s1.history[0].removed, static_cast<std::size_t>(0.05 * static_cast<double>(s0.graph.num_edges())));
}

TEST(Evolve, FailureLeavesStateIntactAndNamesStep) {
  auto c = small_config();
  c.evolution_steps = 5;
  auto profiles = synthetic_profiles(c.num_nodes);
  ScriptedBackend backend(oracle_for(profiles, c));
  auto h0 = construct(profiles, c, backend).graph;

  int optimize_calls = 0;
  backend.before_optimize = [&] {
    if (++optimize_calls == 3) throw TransportError("rate limited for good");
  };
  try {
    evolve(h0, profiles, c, backend);
    FAIL() << "expected EvolutionError";
  } catch (const EvolutionError& e) {
    EXPECT_EQ(e.step(), 3u);
    EXPECT_NE(std::string(e.what()).find("rate limited"), std::string::npos);
  }

  EvolutionState s0;
  s0.graph = h0;
  const auto snapshot = s0.graph;
  backend.before_optimize = [] { throw TransportError("down"); };
  EXPECT_THROW(evolve_step(s0, backend, profiles, c), TransportError);
  EXPECT_EQ(s0.graph, snapshot);
  EXPECT_EQ(s0.step, 0u);
  EXPECT_TRUE(s0.history.empty());
}

TEST(Evolve, OverDenseStartLosesDensity) {
  GenerationConfig c;
  c.num_nodes = 200;
  c.evolution_steps = 20;
  c.diversity_target = 0.2;
  auto profiles = synthetic_profiles(c.num_nodes);
  TemporalHypergraph h0;
  for (const auto& p : profiles) h0.add_node(p.id);
  for (NodeId i = 0; i < 40; ++i) h0.add_hyperedge({100, 101 + i});  // all share node 100
  const std::size_t all[] = {h0.num_edges()};
  ASSERT_EQ(density_of_interactions_series(h0, all).front().doi, 1.0);
  auto backend = oracle_for(profiles, c);
  auto res = evolve(h0, profiles, c, backend);
  EXPECT_EQ(res.state.history.front().directive, DirectiveKind::kEnhanceDiversity);
  ASSERT_TRUE(res.state.history.back().doi_after);
  EXPECT_LT(*res.state.history.back().doi_after, 1.0);
}

TEST(Evolve, DeterministicForSeed) {
  auto c = small_config();
  c.evolution_steps = 4;
  auto profiles = synthetic_profiles(c.num_nodes);
  auto b1 = oracle_for(profiles, c), b2 = oracle_for(profiles, c);
  auto h0 = construct(profiles, c, b1).graph;
  auto r1 = evolve(h0, profiles, c, b1), r2 = evolve(h0, profiles, c, b2);
  EXPECT_EQ(r1.state.graph, r2.state.graph);
  EXPECT_EQ(counters_csv(r1.state), counters_csv(r2.state));
}
