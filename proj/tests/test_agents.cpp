#include <gtest/gtest.h>

#include <cmath>

#include "agent_fixtures.hpp"
#include "hypergen/agents.hpp"
#include "hypergen/error.hpp"
#include "hypergen/statistics.hpp"

using namespace hypergen;

namespace {

EntityProfile profile(NodeId id, std::string field) {
  EntityProfile p;
  p.id = id;
  p.attributes = {{"field", std::move(field)}};
  p.persona = "works on things";
  return p;
}

MicroParams model(double q = 0.0) {
  MicroParams p;
  p.alpha = 1.0;
  p.exponent_gamma = 1.5;
  p.q_threshold = q;
  return p;
}

}  // namespace

TEST(AgentParsing, GeneratorFixtures) {
  for (const auto& f : fixtures::generator_fixtures) {
    auto c = parse_generator_response(f.text, f.center);
    EXPECT_EQ(c.nodes, f.expected) << f.text;
    EXPECT_EQ(c.center, f.center);
    auto via_role = std::get<CandidateHyperedge>(parse_response(AgentRole::kGenerator, f.text, f.center));
    EXPECT_EQ(via_role, c);
  }
  EXPECT_THROW(parse_generator_response("I cannot decide.", 1), ParseError);
}

TEST(AgentParsing, ReviewerFixtures) {
  for (const auto& f : fixtures::reviewer_fixtures) {
    EXPECT_EQ(parse_reviewer_response(f.text).verdict, f.expected) << f.text;
    EXPECT_EQ(std::get<ReviewDecision>(parse_response(AgentRole::kReviewer, f.text)).verdict, f.expected);
  }
}

TEST(AgentParsing, RemoverFixtures) {
  for (const auto& f : fixtures::remover_fixtures) {
    EXPECT_EQ(parse_remover_response(f.text).indices, f.expected) << f.text;
    EXPECT_EQ(std::get<RemovalDecision>(parse_response(AgentRole::kRemover, f.text)).indices, f.expected);
  }
}

TEST(AgentParsing, OptimizerFixtures) {
  for (const auto& f : fixtures::optimizer_fixtures) {
    auto d = parse_optimizer_response(f.text);
    EXPECT_EQ(d.kind, f.kind) << f.text;
    EXPECT_EQ(d.focus_entities, f.focus) << f.text;
    EXPECT_EQ(std::get<StrategyDirective>(parse_response(AgentRole::kOptimizer, f.text)).kind, f.kind);
  }
}

TEST(AgentNames, RoundTrip) {
  for (auto k : {DirectiveKind::kIncreaseConnections, DirectiveKind::kEnhanceDiversity,
                 DirectiveKind::kReduceClustering, DirectiveKind::kMaintain})
    EXPECT_EQ(directive_from_name(directive_name(k)), k);
  EXPECT_FALSE(directive_from_name("GROW"));
  EXPECT_EQ(role_name(AgentRole::kRemover), "REMOVER");
}

TEST(Prompts, GeneratorContainsContextAndFailsOnMissingFields) {
  auto center = profile(3, "biology");
  TemporalHypergraph g;
  g.add_hyperedge({3, 4});
  g.add_hyperedge({3, 5, 6});
  GeneratorContext ctx;
  ctx.domain = "research";
  ctx.center = &center;
  ctx.local = g.local_context(3, 10);
  ctx.k = 3;
  ctx.candidate_entities = {4, 5, 9};
  auto p = build_prompt(ctx);
  EXPECT_EQ(p.system, kGeneratorSystemPrompt);
  for (const char* needle : {"research network", "Central Entity: 3", "field: biology", "belongs to 2 hyperedges",
                             "#1 {3, 5, 6}", "Candidate Entities: 4, 5, 9", "size 3"})
    EXPECT_NE(p.user.find(needle), std::string::npos) << needle;
  EXPECT_EQ(p.user.find("Global Strategy"), std::string::npos);
  ctx.directive = StrategyDirective{DirectiveKind::kEnhanceDiversity, {9}, ""};
  EXPECT_NE(build_prompt(ctx).user.find("Global Strategy: ENHANCE_DIVERSITY (focus entities: 9)"), std::string::npos);

  auto missing = [](GeneratorContext c) {
    try {
      build_prompt(c);
    } catch (const TemplateError& e) {
      return e.field();
    }
    return std::string();
  };
  auto c = ctx;
  c.domain.clear();
  EXPECT_EQ(missing(c), "domain");
  c = ctx;
  c.center = nullptr;
  EXPECT_EQ(missing(c), "center");
  c = ctx;
  c.local.reset();
  EXPECT_EQ(missing(c), "local_context");
  c = ctx;
  c.k = 1;
  EXPECT_EQ(missing(c), "k");
}

TEST(Prompts, OtherRoles) {
  auto a = profile(1, "x"), b = profile(2, "y");
  CandidateHyperedge cand{{1, 2}, 1, ""};
  ReviewerContext rc;
  EXPECT_THROW(build_prompt(rc), TemplateError);
  rc.candidate = &cand;
  EXPECT_THROW(build_prompt(rc), TemplateError);
  rc.members = {&a, &b};
  auto rp = build_prompt(rc);
  EXPECT_EQ(rp.system, kReviewerSystemPrompt);
  EXPECT_NE(rp.user.find("Candidate Hyperedge: {1, 2}"), std::string::npos);
  EXPECT_NE(rp.user.find("\"APPROVE\" or \"REJECT\""), std::string::npos);

  TemporalHypergraph g;
  for (NodeId i = 0; i < 250; ++i) g.add_hyperedge({i, i + 1});
  RemoverContext mc;
  mc.graph = &g;
  EXPECT_THROW(build_prompt(mc), TemplateError);
  mc.directive = StrategyDirective{};
  auto mp = build_prompt(mc);
  EXPECT_NE(mp.user.find("the 200 most recent of 250"), std::string::npos);
  EXPECT_NE(mp.user.find("[249] {249, 250}"), std::string::npos);
  EXPECT_EQ(mp.user.find("[49] {"), std::string::npos);

  OptimizerContext oc;
  try {
    build_prompt(oc);
    FAIL();
  } catch (const TemplateError& e) {
    EXPECT_EQ(e.field(), "statistics");
  }
  oc.statistics = compute_network_statistics(g, {});
  oc.suggestion_count = 5;
  auto op = build_prompt(oc);
  EXPECT_EQ(op.system, kOptimizerSystemPrompt);
  EXPECT_NE(op.user.find("- hyperedges: 250"), std::string::npos);
  EXPECT_NE(op.user.find("up to 5 entity IDs"), std::string::npos);
}

TEST(Statistics, HandExample) {
  TemporalHypergraph g;
  g.add_hyperedge({1, 2, 3});
  g.add_hyperedge({3, 4});
  g.add_hyperedge({5, 6});
  g.add_node(7);
  std::vector<EntityProfile> profiles{profile(1, "a"), profile(2, "a"), profile(3, "b"), profile(4, "b")};
  auto s = compute_network_statistics(g, profiles);
  EXPECT_EQ(s.num_nodes, 7u);
  EXPECT_EQ(s.num_edges, 3u);
  EXPECT_DOUBLE_EQ(s.mean_degree, 7.0 / 7.0);
  EXPECT_EQ(s.max_degree, 2u);
  EXPECT_DOUBLE_EQ(s.mean_edge_size, 7.0 / 3.0);
  ASSERT_TRUE(s.doi);
  EXPECT_DOUBLE_EQ(*s.doi, 1.0 / 3.0);
  EXPECT_EQ(s.components, 3u);  // {1,2,3,4} {5,6} {7}
  // Distinct key=value pairs per edge: {a, b} = 2, {b} = 1, none = 0.
  EXPECT_DOUBLE_EQ(s.attribute_diversity, 1.0);
  ASSERT_FALSE(s.top_entities.empty());
  EXPECT_EQ(s.top_entities.front(), 3u);
}

TEST(Oracle, GeneratorMarginalsMatchSelectionProbabilities) {
  auto pop = RankedPopulation::sequential(20);
  auto params = model();
  auto w = selection_probabilities(pop, params);
  auto center = profile(4, "x");
  GeneratorContext ctx;
  ctx.center = &center;
  ctx.k = 2;
  OracleBackend backend(pop, params);
  std::vector<double> freq(20, 0.0);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    auto c = backend.generate(ctx, derive_seed(7, static_cast<std::uint64_t>(i)));
    ASSERT_EQ(c.nodes.size(), 2u);
    ASSERT_TRUE(std::count(c.nodes.begin(), c.nodes.end(), 4u));
    for (auto v : c.nodes)
      if (v != 4) freq[v] += 1.0 / draws;
  }
  double tv = 0;
  for (std::size_t j = 0; j < 20; ++j) tv += 0.5 * std::abs(freq[j] - (j == 4 ? 0.0 : w[j] / (1 - w[4])));
  EXPECT_LT(tv, 0.05);
  EXPECT_EQ(freq[4], 0.0);
}

TEST(Oracle, GeneratorIsSeededAndCapped) {
  auto pop = RankedPopulation::sequential(10);
  auto params = model(0.75);  // three eligible: 0, 1, 2
  auto center = profile(0, "x");
  GeneratorContext ctx;
  ctx.center = &center;
  ctx.k = 6;
  auto a = oracle_generate(ctx, pop, params, 5);
  EXPECT_EQ(a, oracle_generate(ctx, pop, params, 5));
  EXPECT_EQ(a.nodes, (std::vector<NodeId>{0, 1, 2}));
  auto outsider = profile(99, "x");
  ctx.center = &outsider;
  EXPECT_THROW(oracle_generate(ctx, pop, params, 5), InvalidArgumentError);
}

TEST(Oracle, ReviewerRules) {
  auto pop = RankedPopulation::sequential(10);
  auto params = model(0.5);
  TemporalHypergraph g;
  g.add_hyperedge({0, 1});
  CandidateHyperedge ok{{0, 2}, 0, ""}, filtered{{0, 8}, 0, ""}, unknown{{0, 42}, 0, ""}, dup{{0, 1}, 0, ""};
  ReviewerContext rc;
  rc.graph = &g;
  rc.candidate = &ok;
  EXPECT_EQ(oracle_review(rc, pop, params).verdict, Verdict::kApprove);
  rc.candidate = &filtered;
  EXPECT_EQ(oracle_review(rc, pop, params).verdict, Verdict::kReject);
  rc.candidate = &unknown;
  EXPECT_EQ(oracle_review(rc, pop, params).verdict, Verdict::kReject);
  rc.candidate = &dup;
  EXPECT_EQ(oracle_review(rc, pop, params).verdict, Verdict::kReject);
  // Oracle verdict text parses back to the same verdict.
  EXPECT_EQ(parse_reviewer_response(oracle_review(rc, pop, params).reason).verdict, Verdict::kReject);
}

TEST(Oracle, RemoverPrunesLowestQualityUpToCap) {
  auto pop = RankedPopulation::sequential(10);  // quality 1 - (r - 1) / 10
  auto params = model(0.5);
  TemporalHypergraph g;
  for (int i = 0; i < 10; ++i) g.add_hyperedge({0, 1});  // mean quality 0.95
  g.add_hyperedge({8, 9});                                 // 0.15
  g.add_hyperedge({6, 7});                                 // 0.35
  g.add_hyperedge({5, 9});                                 // 0.3
  RemoverContext rc;
  rc.graph = &g;
  OracleSettings s;
  s.remove_fraction = 2.0 / 13.0 + 1e-9;
  EXPECT_EQ(oracle_remove(rc, pop, params, s).indices, (std::vector<EdgeIndex>{10, 12}));
  s.remove_fraction = 1.0;
  EXPECT_EQ(oracle_remove(rc, pop, params, s).indices, (std::vector<EdgeIndex>{10, 11, 12}));
  s.remove_fraction = 0.05;  // floor(0.65) = 0
  EXPECT_TRUE(oracle_remove(rc, pop, params, s).indices.empty());
}

TEST(Oracle, OptimizerFollowsDensityTarget) {
  auto pop = RankedPopulation::sequential(10);
  auto params = model();
  OptimizerContext oc;
  oc.statistics = NetworkStatistics{};
  oc.statistics->doi = 0.6;
  oc.suggestion_count = 3;
  OracleSettings s;
  auto d = oracle_optimize(oc, pop, params, s);
  EXPECT_EQ(d.kind, DirectiveKind::kEnhanceDiversity);
  EXPECT_EQ(d.focus_entities, (std::vector<NodeId>{0, 1, 2}));
  oc.statistics->doi = 0.1;
  EXPECT_EQ(oracle_optimize(oc, pop, params, s).kind, DirectiveKind::kIncreaseConnections);
  oc.statistics->doi.reset();
  oc.suggestion_count = 0;
  d = oracle_optimize(oc, pop, params, s);
  EXPECT_EQ(d.kind, DirectiveKind::kIncreaseConnections);
  EXPECT_TRUE(d.focus_entities.empty());
}
