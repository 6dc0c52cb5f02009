#include "hypergen/engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

#include "hypergen/patterns.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

void GenerationConfig::validate() const {
  if (!(attach_probability >= 0.0 && attach_probability <= 1.0))
    throw InvalidArgumentError("attach_probability must lie in [0, 1]");
  if (min_edge_size < 2) throw InvalidArgumentError("min_edge_size must be at least 2");
  if (max_edge_size < min_edge_size) throw InvalidArgumentError("max_edge_size must be >= min_edge_size");
  if (!(size_exponent >= 0.0) || !std::isfinite(size_exponent)) throw InvalidArgumentError("size_exponent must be >= 0");
  if (size_spec && (size_spec->min_size() < min_edge_size || size_spec->max_size() > max_edge_size))
    throw InvalidArgumentError("size_spec must stay within [min_edge_size, max_edge_size]");
  if (!(focus_bias >= 0.0 && focus_bias <= 1.0)) throw InvalidArgumentError("focus_bias must lie in [0, 1]");
  if (!(remove_fraction >= 0.0 && remove_fraction <= 1.0))
    throw InvalidArgumentError("remove_fraction must lie in [0, 1]");
  if (domain_label.empty()) throw InvalidArgumentError("domain_label must not be empty");
  oracle_params(*this).validate();
}

namespace {

std::size_t as_count(std::string_view v, std::size_t line) {
  auto x = text::parse_uint(v);
  if (!x) throw ParseError(line, "expected a non-negative integer, got '" + std::string(v) + "'");
  return static_cast<std::size_t>(*x);
}

double as_real(std::string_view v, std::size_t line) {
  auto x = text::parse_double(v);
  if (!x || !std::isfinite(*x)) throw ParseError(line, "expected a number, got '" + std::string(v) + "'");
  return *x;
}

SizeSampler parse_size_spec(std::string_view v, std::size_t line) {
  std::vector<std::size_t> sizes;
  std::vector<double> weights;
  for (auto item : text::split(v, ',')) {
    item = text::trim(item);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "size_spec entries must be size:weight");
    sizes.push_back(as_count(text::trim(item.substr(0, colon)), line));
    weights.push_back(as_real(text::trim(item.substr(colon + 1)), line));
  }
  try {
    return SizeSampler::discrete(std::move(sizes), std::move(weights));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(line, e.what());
  }
}

using Setter = std::function<void(GenerationConfig&, std::string_view, std::size_t)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"num_nodes", [](auto& c, auto v, auto l) { c.num_nodes = as_count(v, l); }},
      {"target_edges", [](auto& c, auto v, auto l) { c.target_edges = as_count(v, l); }},
      {"attach_probability", [](auto& c, auto v, auto l) { c.attach_probability = as_real(v, l); }},
      {"size_spec", [](auto& c, auto v, auto l) {
         if (v.empty() || v == "default") c.size_spec.reset();
         else c.size_spec = parse_size_spec(v, l);
       }},
      {"min_edge_size", [](auto& c, auto v, auto l) { c.min_edge_size = as_count(v, l); }},
      {"max_edge_size", [](auto& c, auto v, auto l) { c.max_edge_size = as_count(v, l); }},
      {"size_exponent", [](auto& c, auto v, auto l) { c.size_exponent = as_real(v, l); }},
      {"optimizer_suggestion_count", [](auto& c, auto v, auto l) { c.optimizer_suggestion_count = as_count(v, l); }},
      {"evolution_steps", [](auto& c, auto v, auto l) { c.evolution_steps = as_count(v, l); }},
      {"generation_attempts_per_step", [](auto& c, auto v, auto l) { c.generation_attempts_per_step = as_count(v, l); }},
      {"seed", [](auto& c, auto v, auto l) { c.seed = as_count(v, l); }},
      {"domain_label", [](auto& c, auto v, auto) { c.domain_label = std::string(v); }},
      {"backend", [](auto& c, auto v, auto l) {
         if (v == "oracle") c.backend = BackendKind::kOracle;
         else if (v == "remote") c.backend = BackendKind::kRemote;
         else throw ParseError(l, "backend must be oracle or remote");
       }},
      {"focus_bias", [](auto& c, auto v, auto l) { c.focus_bias = as_real(v, l); }},
      {"local_context_edges", [](auto& c, auto v, auto l) { c.local_context_edges = as_count(v, l); }},
      {"duplicate_window", [](auto& c, auto v, auto l) { c.duplicate_window = as_count(v, l); }},
      {"candidate_pool", [](auto& c, auto v, auto l) { c.candidate_pool = as_count(v, l); }},
      {"oracle_alpha", [](auto& c, auto v, auto l) { c.oracle_alpha = as_real(v, l); }},
      {"oracle_gamma", [](auto& c, auto v, auto l) { c.oracle_gamma = as_real(v, l); }},
      {"quality_threshold", [](auto& c, auto v, auto l) { c.quality_threshold = as_real(v, l); }},
      {"remove_fraction", [](auto& c, auto v, auto l) { c.remove_fraction = as_real(v, l); }},
      {"diversity_target", [](auto& c, auto v, auto l) { c.diversity_target = as_real(v, l); }},
  };
  return table;
}

}  // namespace

GenerationConfig parse_generation_config(std::string_view input, GenerationConfig base) {
  std::size_t line_no = 0;
  for (auto raw : text::split(input, '\n')) {
    ++line_no;
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    const auto key = text::trim(line.substr(0, eq));
    const auto value = text::trim(line.substr(eq + 1));
    auto it = setters().find(key);
    if (it == setters().end()) throw ParseError(line_no, "unknown config key '" + std::string(key) + "'");
    it->second(base, value, line_no);
  }
  return base;
}

GenerationConfig read_generation_config(const std::string& path, GenerationConfig base) {
  return parse_generation_config(text::read_file(path), std::move(base));
}

std::string serialize_generation_config(const GenerationConfig& c) {
  std::string out;
  auto kv = [&](const char* k, const std::string& v) { out += std::string(k) + '=' + v + '\n'; };
  auto num = [](double v) { return text::format_double(v); };
  kv("num_nodes", std::to_string(c.num_nodes));
  kv("target_edges", std::to_string(c.target_edges));
  kv("attach_probability", num(c.attach_probability));
  if (c.size_spec) {
    std::string spec;
    const auto p = c.size_spec->probabilities();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) spec += ',';
      spec += std::to_string(c.size_spec->sizes()[i]) + ':' + num(p[i]);
    }
    kv("size_spec", spec);
  }
  kv("min_edge_size", std::to_string(c.min_edge_size));
  kv("max_edge_size", std::to_string(c.max_edge_size));
  kv("size_exponent", num(c.size_exponent));
  kv("optimizer_suggestion_count", std::to_string(c.optimizer_suggestion_count));
  kv("evolution_steps", std::to_string(c.evolution_steps));
  kv("generation_attempts_per_step", std::to_string(c.generation_attempts_per_step));
  kv("seed", std::to_string(c.seed));
  kv("domain_label", c.domain_label);
  kv("backend", c.backend == BackendKind::kOracle ? "oracle" : "remote");
  kv("focus_bias", num(c.focus_bias));
  kv("local_context_edges", std::to_string(c.local_context_edges));
  kv("duplicate_window", std::to_string(c.duplicate_window));
  kv("candidate_pool", std::to_string(c.candidate_pool));
  kv("oracle_alpha", num(c.oracle_alpha));
  kv("oracle_gamma", num(c.oracle_gamma));
  kv("quality_threshold", num(c.quality_threshold));
  kv("remove_fraction", num(c.remove_fraction));
  kv("diversity_target", num(c.diversity_target));
  return out;
}

RankedPopulation population_from_profiles(const std::vector<EntityProfile>& profiles) {
  const auto n = profiles.size();
  std::vector<NodeId> nodes;
  std::vector<std::size_t> ranks;
  nodes.reserve(n);
  bool use_attribute = n > 0;
  std::vector<bool> seen(n + 1, false);
  for (const auto& p : profiles) {
    nodes.push_back(p.id);
    if (!use_attribute) continue;
    auto r = p.attribute("rank");
    auto value = r ? text::parse_uint(*r) : std::nullopt;
    if (!value || *value < 1 || *value > n || seen[*value]) {
      use_attribute = false;
      continue;
    }
    seen[*value] = true;
    ranks.push_back(static_cast<std::size_t>(*value));
  }
  if (!use_attribute) {
    ranks.resize(n);
    for (std::size_t i = 0; i < n; ++i) ranks[i] = i + 1;
  }
  return RankedPopulation::with_default_quality(std::move(nodes), std::move(ranks));
}

MicroParams oracle_params(const GenerationConfig& config) {
  MicroParams p;
  p.alpha = config.oracle_alpha;
  p.exponent_gamma = config.oracle_gamma;
  p.q_threshold = config.quality_threshold;
  return p;
}

OracleSettings oracle_settings(const GenerationConfig& config) {
  return {config.remove_fraction, config.diversity_target};
}

NodeId select_entity(const TemporalHypergraph& h, const GenerationConfig& config,
                     const StrategyDirective* directive, Rng& rng) {
  const auto& nodes = h.nodes();
  if (nodes.empty()) throw InvalidArgumentError("cannot select an entity from an empty node set");
  if (directive && !directive->focus_entities.empty()) {
    std::vector<NodeId> focus;
    for (auto v : directive->focus_entities)
      if (h.contains_node(v)) focus.push_back(v);
    if (!focus.empty() && rng.bernoulli(config.focus_bias)) return focus[rng.uniform_index(focus.size())];
  }
  if (rng.bernoulli(config.attach_probability)) {
    // Degree + 1 keeps isolated nodes reachable.
    std::vector<double> cumulative;
    cumulative.reserve(nodes.size());
    double acc = 0.0;
    for (auto v : nodes) {
      acc += static_cast<double>(h.degree(v) + 1);
      cumulative.push_back(acc);
    }
    return *std::next(nodes.begin(), static_cast<std::ptrdiff_t>(rng.weighted_index(cumulative)));
  }
  return *std::next(nodes.begin(), static_cast<std::ptrdiff_t>(rng.uniform_index(nodes.size())));
}

SizeSampler effective_size_sampler(const GenerationConfig& config) {
  if (config.size_spec) return *config.size_spec;
  return SizeSampler::truncated_power_law(config.min_edge_size, config.max_edge_size, config.size_exponent);
}

std::size_t determine_hyperedge_size(const GenerationConfig& config, Rng& rng) {
  return effective_size_sampler(config).sample(rng);
}

namespace {

bool recent_duplicate(const std::vector<NodeId>& nodes, const TemporalHypergraph& h, std::size_t window) {
  const auto m = h.num_edges();
  const auto first = m > window ? m - window : 0;
  for (auto i = first; i < m; ++i)
    if (h.edge(i).nodes == nodes) return true;
  return false;
}

}  // namespace

ValidationResult validate_candidate(const CandidateHyperedge& cand, const TemporalHypergraph& h,
                                    const GenerationConfig& config) {
  for (auto v : cand.nodes)
    if (!h.contains_node(v)) return {false, "unknown node"};
  std::vector<NodeId> sorted = cand.nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < config.min_edge_size || sorted.size() > config.max_edge_size) return {false, "size"};
  if (!std::binary_search(sorted.begin(), sorted.end(), cand.center)) return {false, "center"};
  if (recent_duplicate(sorted, h, config.duplicate_window)) return {false, "duplicate"};
  return {true, {}};
}

namespace {

using ProfileIndex = std::unordered_map<NodeId, const EntityProfile*>;

ProfileIndex index_profiles(const std::vector<EntityProfile>& profiles) {
  ProfileIndex idx;
  for (const auto& p : profiles) idx.emplace(p.id, &p);
  return idx;
}

// Neighbours first, then directive entities, then a seeded sample of others.
std::vector<NodeId> candidate_entities(const TemporalHypergraph& h, const LocalContext& local,
                                       const StrategyDirective* directive, std::size_t pool, std::uint64_t seed) {
  std::vector<NodeId> out;
  auto add = [&](NodeId v) {
    if (out.size() < pool && v != local.node && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& e : local.recent_edges)
    for (auto v : e.nodes) add(v);
  if (directive)
    for (auto v : directive->focus_entities)
      if (h.contains_node(v)) add(v);
  const auto& nodes = h.nodes();
  if (nodes.size() > 1 && out.size() < pool) {
    Rng rng(seed);
    std::vector<NodeId> all(nodes.begin(), nodes.end());
    for (std::size_t tries = 0; out.size() < pool && tries < 4 * pool; ++tries) add(all[rng.uniform_index(all.size())]);
  }
  return out;
}

// Errors that mean the backend itself is unusable, as opposed to one bad answer.
bool is_backend_failure(const std::exception& e) {
  return dynamic_cast<const TransportError*>(&e) || dynamic_cast<const CredentialError*>(&e) ||
         dynamic_cast<const ProtocolError*>(&e);
}

const EntityProfile& profile_or_stub(const ProfileIndex& idx, NodeId v, EntityProfile& stub) {
  auto it = idx.find(v);
  if (it != idx.end()) return *it->second;
  stub = EntityProfile{v, {}, {}};
  return stub;
}

}  // namespace

ConstructResult construct(const std::vector<EntityProfile>& profiles, const GenerationConfig& config,
                          AgentBackend& backend) {
  if (profiles.empty()) throw InvalidArgumentError("construction needs at least one profile");
  config.validate();
  ConstructResult out;
  for (const auto& p : profiles) out.graph.add_node(p.id);
  const auto idx = index_profiles(profiles);
  const auto sampler = effective_size_sampler(config);
  Rng rng(derive_seed(config.seed, 0xC0));
  EntityProfile stub;

  for (std::size_t i = 0; i < config.target_edges; ++i) {
    ++out.attempts;
    const auto center = select_entity(out.graph, config, nullptr, rng);
    const auto k = sampler.sample(rng);
    GeneratorContext ctx;
    ctx.domain = config.domain_label;
    ctx.center = &profile_or_stub(idx, center, stub);
    ctx.local = out.graph.local_context(center, config.local_context_edges);
    ctx.k = k;
    const auto attempt_seed = derive_seed(config.seed, 0xC1, i);
    ctx.candidate_entities = candidate_entities(out.graph, *ctx.local, nullptr, config.candidate_pool, attempt_seed);

    CandidateHyperedge cand;
    try {
      cand = backend.generate(ctx, attempt_seed);
    } catch (const ParseError&) {
      ++out.discarded;
      continue;
    } catch (const std::exception& e) {
      if (!is_backend_failure(e)) throw;
      out.aborted_reason = "attempt " + std::to_string(i + 1) + ": " + e.what();
      break;
    }
    if (!validate_candidate(cand, out.graph, config).accepted) {
      ++out.discarded;
      continue;
    }
    out.graph.add_hyperedge(Hyperedge::make(cand.nodes, out.graph.num_edges()));
    ++out.accepted;
  }
  return out;
}

EvolutionState evolve_step(const EvolutionState& state, AgentBackend& backend,
                           const std::vector<EntityProfile>& profiles, const GenerationConfig& config) {
  EvolutionState next = state;
  auto& g = next.graph;
  StepRecord rec;
  rec.step = state.step + 1;
  rec.edges_before = g.num_edges();
  const auto step_seed = derive_seed(config.seed, 0x5715, rec.step);
  const auto idx = index_profiles(profiles);

  // (1) Global directive.
  OptimizerContext octx;
  octx.statistics = compute_network_statistics(g, profiles);
  octx.suggestion_count = config.optimizer_suggestion_count;
  auto directive = backend.optimize(octx, derive_seed(step_seed, 1));
  ++rec.optimizer_calls;
  {
    std::vector<NodeId> focus;
    for (auto v : directive.focus_entities)
      if (g.contains_node(v) && std::find(focus.begin(), focus.end(), v) == focus.end() &&
          focus.size() < config.optimizer_suggestion_count)
        focus.push_back(v);
    directive.focus_entities = std::move(focus);
  }
  rec.directive = directive.kind;

  // (2) Pruning, capped at remove_fraction of the current edges.
  if (g.num_edges() > 0) {
    RemoverContext rctx;
    rctx.graph = &g;
    rctx.directive = directive;
    auto removal = backend.remove(rctx, derive_seed(step_seed, 2));
    ++rec.remover_calls;
    std::vector<EdgeIndex> valid;
    for (auto i : removal.indices)
      if (i < g.num_edges()) valid.push_back(i);
    std::sort(valid.begin(), valid.end());
    valid.erase(std::unique(valid.begin(), valid.end()), valid.end());
    const auto cap = static_cast<std::size_t>(config.remove_fraction * static_cast<double>(g.num_edges()));
    if (valid.size() > cap) valid.resize(cap);
    rec.removed = g.remove_hyperedges(valid);
  }

  // (3)-(4) Candidates against the pruned graph, reviewed one by one.
  Rng rng(derive_seed(step_seed, 3));
  const auto sampler = effective_size_sampler(config);
  std::vector<std::vector<NodeId>> approved;
  EntityProfile stub;
  for (std::size_t a = 0; a < config.generation_attempts_per_step; ++a) {
    if (g.num_nodes() == 0) break;
    const auto center = select_entity(g, config, &directive, rng);
    const auto k = sampler.sample(rng);
    GeneratorContext gctx;
    gctx.domain = config.domain_label;
    gctx.center = &profile_or_stub(idx, center, stub);
    gctx.local = g.local_context(center, config.local_context_edges);
    gctx.k = k;
    gctx.directive = directive;
    const auto attempt_seed = derive_seed(step_seed, 4, a);
    gctx.candidate_entities = candidate_entities(g, *gctx.local, &directive, config.candidate_pool, attempt_seed);
    ++rec.proposed;

    CandidateHyperedge cand;
    try {
      cand = backend.generate(gctx, attempt_seed);
    } catch (const ParseError&) {
      ++rec.discarded;
      continue;
    }
    if (!validate_candidate(cand, g, config).accepted ||
        std::find(approved.begin(), approved.end(), cand.nodes) != approved.end()) {
      ++rec.discarded;
      continue;
    }
    ReviewerContext vctx;
    vctx.candidate = &cand;
    std::vector<EntityProfile> stubs;
    stubs.reserve(cand.nodes.size());
    for (auto v : cand.nodes) {
      auto it = idx.find(v);
      if (it != idx.end()) {
        vctx.members.push_back(it->second);
      } else {
        stubs.push_back(EntityProfile{v, {}, {}});
        vctx.members.push_back(&stubs.back());
      }
    }
    vctx.directive = directive;
    vctx.graph = &g;
    if (backend.review(vctx, derive_seed(step_seed, 5, a)).verdict == Verdict::kApprove)
      approved.push_back(cand.nodes);
    else
      ++rec.rejected;
  }

  // (5) Merge in attempt order with fresh timestamps.
  Timestamp ts = g.empty() ? 0 : g.max_timestamp() + 1;
  for (auto& nodes : approved) g.add_hyperedge(Hyperedge::make(std::move(nodes), ts++));
  rec.accepted = approved.size();
  rec.edges_after = g.num_edges();
  if (g.num_edges() >= 2) {
    const std::size_t all[] = {g.num_edges()};
    rec.doi_after = density_of_interactions_series(g, all).front().doi;
  }

  next.step = rec.step;
  next.last_directive = std::move(directive);
  next.total_removed += rec.removed;
  next.total_accepted += rec.accepted;
  next.total_rejected += rec.rejected;
  next.total_discarded += rec.discarded;
  next.history.push_back(rec);
  return next;
}

EvolveResult evolve(const TemporalHypergraph& h0, const std::vector<EntityProfile>& profiles,
                    const GenerationConfig& config, AgentBackend& backend, const TemporalHypergraph* reference,
                    const ReportConfig& report_config) {
  config.validate();
  EvolutionState state;
  state.graph = h0;
  for (std::size_t s = 0; s < config.evolution_steps; ++s) {
    try {
      state = evolve_step(state, backend, profiles, config);
    } catch (const EvolutionError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvolutionError(state.step + 1, e.what());
    }
  }
  auto report = pattern_report(reference, state.graph, report_config);
  return {std::move(state), std::move(report)};
}

std::string counters_csv(const EvolutionState& state) {
  std::string out =
      "step,edges_before,removed,proposed,accepted,rejected,discarded,edges_after,optimizer_calls,remover_calls,"
      "directive,doi\n";
  for (const auto& r : state.history) {
    out += std::to_string(r.step) + ',' + std::to_string(r.edges_before) + ',' + std::to_string(r.removed) + ',' +
           std::to_string(r.proposed) + ',' + std::to_string(r.accepted) + ',' + std::to_string(r.rejected) + ',' +
           std::to_string(r.discarded) + ',' + std::to_string(r.edges_after) + ',' +
           std::to_string(r.optimizer_calls) + ',' + std::to_string(r.remover_calls) + ',' +
           std::string(directive_name(r.directive)) + ',' + (r.doi_after ? text::format_double(*r.doi_after) : "") +
           '\n';
  }
  return out;
}

}  // namespace hypergen
