#include <algorithm>
#include <numeric>

#include "hypergen/agents.hpp"
#include "hypergen/error.hpp"
#include "hypergen/text.hpp"

// The oracle plays every role from the ranked-population model: generators
// pick collaborators with the selection probabilities, reviewers and
// removers enforce the quality filter.

namespace hypergen {

namespace {

std::size_t index_in(const RankedPopulation& pop, NodeId v) {
  auto i = pop.index_of(v);
  if (!i) throw InvalidArgumentError("node " + std::to_string(v) + " is not in the ranked population");
  return *i;
}

CandidateHyperedge generate_with(const GeneratorContext& ctx, const RankedPopulation& pop,
                                 const std::vector<double>& weights, const std::vector<double>& cumulative,
                                 std::uint64_t seed) {
  if (!ctx.center) throw TemplateError("center");
  if (ctx.k < 2) throw TemplateError("k");
  const auto c = index_in(pop, ctx.center->id);
  std::size_t available = 0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (i != c && weights[i] > 0.0) ++available;
  const auto want = std::min(ctx.k - 1, available);

  Rng rng(seed);
  const auto picked = sample_without_replacement(weights, cumulative, want, {c}, rng);
  CandidateHyperedge cand;
  cand.center = ctx.center->id;
  cand.nodes.push_back(cand.center);
  for (auto i : picked) cand.nodes.push_back(pop.node(i));
  std::sort(cand.nodes.begin(), cand.nodes.end());
  cand.justification = "collaborators drawn by rank preference";
  return cand;
}

double mean_quality(const Hyperedge& e, const RankedPopulation& pop) {
  double sum = 0.0;
  for (auto v : e.nodes) {
    auto i = pop.index_of(v);
    sum += i ? pop.quality(*i) : 0.0;
  }
  return sum / static_cast<double>(e.size());
}

bool duplicates_existing(const CandidateHyperedge& cand, const TemporalHypergraph& g) {
  if (!g.contains_node(cand.center)) return false;
  for (auto i : g.incident_edges(cand.center))
    if (g.edge(i).nodes == cand.nodes) return true;
  return false;
}

std::vector<double> cumulative_of(const std::vector<double>& w) {
  std::vector<double> c(w.size());
  std::partial_sum(w.begin(), w.end(), c.begin());
  return c;
}

}  // namespace

CandidateHyperedge oracle_generate(const GeneratorContext& ctx, const RankedPopulation& pop,
                                   const MicroParams& params, std::uint64_t seed) {
  const auto w = selection_probabilities(pop, params);
  return generate_with(ctx, pop, w, cumulative_of(w), seed);
}

ReviewDecision oracle_review(const ReviewerContext& ctx, const RankedPopulation& pop, const MicroParams& params) {
  if (!ctx.candidate) throw TemplateError("candidate");
  for (auto v : ctx.candidate->nodes) {
    auto i = pop.index_of(v);
    if (!i || !(pop.quality(*i) > params.q_threshold))
      return {Verdict::kReject, "REJECT: entity " + std::to_string(v) + " fails the quality filter"};
  }
  if (ctx.graph && duplicates_existing(*ctx.candidate, *ctx.graph))
    return {Verdict::kReject, "REJECT: duplicates an existing hyperedge"};
  return {Verdict::kApprove, "APPROVE"};
}

RemovalDecision oracle_remove(const RemoverContext& ctx, const RankedPopulation& pop, const MicroParams& params,
                              const OracleSettings& settings) {
  if (!ctx.graph) throw TemplateError("hyperedges");
  const auto& g = *ctx.graph;
  const auto cap = static_cast<std::size_t>(settings.remove_fraction * static_cast<double>(g.num_edges()));
  std::vector<std::pair<double, EdgeIndex>> low;
  for (EdgeIndex i = 0; i < g.num_edges(); ++i) {
    const double q = mean_quality(g.edge(i), pop);
    if (q < params.q_threshold) low.emplace_back(q, i);
  }
  std::sort(low.begin(), low.end());
  if (low.size() > cap) low.resize(cap);
  RemovalDecision out;
  for (const auto& [q, i] : low) out.indices.push_back(i);
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

StrategyDirective oracle_optimize(const OptimizerContext& ctx, const RankedPopulation& pop,
                                  const MicroParams& params, const OracleSettings& settings) {
  if (!ctx.statistics) throw TemplateError("statistics");
  const auto& s = *ctx.statistics;
  StrategyDirective d;
  if (s.doi && *s.doi > settings.diversity_target) {
    d.kind = DirectiveKind::kEnhanceDiversity;
    d.rationale = "density of interactions " + text::format_double(*s.doi, 4) + " above target " +
                  text::format_double(settings.diversity_target, 4);
  } else {
    d.kind = DirectiveKind::kIncreaseConnections;
    d.rationale = s.doi ? "density of interactions " + text::format_double(*s.doi, 4) + " within target"
                        : "density of interactions undefined";
  }
  if (ctx.suggestion_count > 0) {
    const auto p = selection_probabilities(pop, params);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > 0.0) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return p[a] != p[b] ? p[a] > p[b] : pop.node(a) < pop.node(b);
    });
    if (order.size() > ctx.suggestion_count) order.resize(ctx.suggestion_count);
    for (auto i : order) d.focus_entities.push_back(pop.node(i));
  }
  return d;
}

OracleBackend::OracleBackend(RankedPopulation pop, MicroParams params, OracleSettings settings)
    : pop_(std::move(pop)), params_(std::move(params)), settings_(settings) {
  params_.validate();
}

CandidateHyperedge OracleBackend::generate(const GeneratorContext& ctx, std::uint64_t seed) {
  if (weights_.empty()) {
    weights_ = selection_probabilities(pop_, params_);
    cumulative_ = cumulative_of(weights_);
  }
  return generate_with(ctx, pop_, weights_, cumulative_, seed);
}

ReviewDecision OracleBackend::review(const ReviewerContext& ctx, std::uint64_t) {
  return oracle_review(ctx, pop_, params_);
}

RemovalDecision OracleBackend::remove(const RemoverContext& ctx, std::uint64_t) {
  return oracle_remove(ctx, pop_, params_, settings_);
}

StrategyDirective OracleBackend::optimize(const OptimizerContext& ctx, std::uint64_t) {
  return oracle_optimize(ctx, pop_, params_, settings_);
}

}  // namespace hypergen
