#include "hypergen/agents.hpp"

#include <algorithm>
#include <cctype>

#include "hypergen/error.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

std::string_view role_name(AgentRole role) {
  switch (role) {
    case AgentRole::kGenerator: return "GENERATOR";
    case AgentRole::kReviewer: return "REVIEWER";
    case AgentRole::kRemover: return "REMOVER";
    case AgentRole::kOptimizer: return "OPTIMIZER";
  }
  return "UNKNOWN";
}

std::string_view directive_name(DirectiveKind kind) {
  switch (kind) {
    case DirectiveKind::kIncreaseConnections: return "INCREASE_CONNECTIONS";
    case DirectiveKind::kEnhanceDiversity: return "ENHANCE_DIVERSITY";
    case DirectiveKind::kReduceClustering: return "REDUCE_CLUSTERING";
    case DirectiveKind::kMaintain: return "MAINTAIN";
  }
  return "MAINTAIN";
}

std::optional<DirectiveKind> directive_from_name(std::string_view name) {
  for (auto k : {DirectiveKind::kIncreaseConnections, DirectiveKind::kEnhanceDiversity,
                 DirectiveKind::kReduceClustering, DirectiveKind::kMaintain})
    if (directive_name(k) == name) return k;
  return std::nullopt;
}

namespace {

std::string join_ids(const std::vector<NodeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string attribute_list(const EntityProfile& p) {
  std::string out;
  for (const auto& [k, v] : p.attributes) {
    if (!out.empty()) out += ", ";
    out += k + ": " + v;
  }
  if (out.empty()) out = "none recorded";
  if (!p.persona.empty()) out += "; persona: " + p.persona;
  return out;
}

std::string strategy_line(const StrategyDirective& d) {
  std::string out = "Global Strategy: ";
  out += directive_name(d.kind);
  if (!d.focus_entities.empty()) out += " (focus entities: " + join_ids(d.focus_entities) + ")";
  return out;
}

std::string number(double v) { return text::format_double(v, 4); }

}  // namespace

Prompt build_prompt(const GeneratorContext& ctx) {
  if (ctx.domain.empty()) throw TemplateError("domain");
  if (!ctx.center) throw TemplateError("center");
  if (!ctx.local) throw TemplateError("local_context");
  if (ctx.k < 2) throw TemplateError("k");

  const auto& local = *ctx.local;
  std::string context;
  if (local.degree == 0) {
    context = "Entity " + std::to_string(ctx.center->id) + " has no existing relationships.";
  } else {
    context = "Entity " + std::to_string(ctx.center->id) + " belongs to " + std::to_string(local.degree) +
              (local.degree == 1 ? " hyperedge." : " hyperedges.") + " Most recent:";
    for (const auto& e : local.recent_edges) context += "\n- #" + std::to_string(e.index) + " {" + join_ids(e.nodes) + "}";
  }

  std::string user = "A new collaboration is being formed in a " + ctx.domain + " network.\n\n";
  user += "Central Entity: " + std::to_string(ctx.center->id) + "\n\n";
  user += "Attributes: " + attribute_list(*ctx.center) + "\n\n";
  user += "Local Context: " + context + "\n\n";
  if (ctx.directive) user += strategy_line(*ctx.directive) + "\n\n";
  if (!ctx.candidate_entities.empty())
    user += "Candidate Entities: " + join_ids(ctx.candidate_entities) + "\n\n";
  user += "Task: Propose a new hyperedge of size " + std::to_string(ctx.k) +
          " that includes the central entity. The group should be semantically coherent and structurally "
          "sound based on the context.\n\n";
  user += "Output the " + std::to_string(ctx.k) + " entity IDs as a bracketed list, e.g. [" +
          std::to_string(ctx.center->id) + ", ...].";
  return {std::string(kGeneratorSystemPrompt), std::move(user)};
}

Prompt build_prompt(const ReviewerContext& ctx) {
  if (!ctx.candidate) throw TemplateError("candidate");
  if (ctx.members.empty()) throw TemplateError("entity_details");

  std::string user = "Please review the following candidate hyperedge:\n\n";
  user += "Candidate Hyperedge: {" + join_ids(ctx.candidate->nodes) + "}\n\n";
  user += "Entity Details:";
  for (const auto* p : ctx.members) {
    if (p) user += "\n- " + std::to_string(p->id) + ": " + attribute_list(*p);
  }
  user += "\n\n";
  if (ctx.directive) user += strategy_line(*ctx.directive) + "\n\n";
  user +=
      "Evaluation Criteria:\n"
      "- Internal Cohesion: Are the members a good fit?\n"
      "- Network Impact: How does this group affect the overall structure?\n\n"
      "Decision: Output \"APPROVE\" or \"REJECT\".";
  return {std::string(kReviewerSystemPrompt), std::move(user)};
}

Prompt build_prompt(const RemoverContext& ctx) {
  if (!ctx.graph) throw TemplateError("hyperedges");
  if (!ctx.directive) throw TemplateError("global_strategy");

  const auto m = ctx.graph->num_edges();
  const auto first = m > ctx.max_listed_edges ? m - ctx.max_listed_edges : 0;
  std::string user = "Analyze the provided list of hyperedges.\n\nHyperedges:";
  if (m == 0) user += " none";
  if (first > 0)
    user += " (the " + std::to_string(m - first) + " most recent of " + std::to_string(m) + ")";
  for (auto i = first; i < m; ++i) user += "\n[" + std::to_string(i) + "] {" + join_ids(ctx.graph->edge(i).nodes) + "}";
  user += "\n\n" + strategy_line(*ctx.directive) + "\n\n";
  user +=
      "Task: Identify indices of hyperedges that are redundant, internally incoherent, or conflict with the "
      "global strategy. Output indices or \"NONE\".";
  return {std::string(kRemoverSystemPrompt), std::move(user)};
}

Prompt build_prompt(const OptimizerContext& ctx) {
  if (!ctx.statistics) throw TemplateError("statistics");
  const auto& s = *ctx.statistics;
  std::string user = "Analyze the current hypergraph state.\n\nNetwork Statistics:\n";
  user += "- nodes: " + std::to_string(s.num_nodes) + "\n";
  user += "- hyperedges: " + std::to_string(s.num_edges) + "\n";
  user += "- mean degree: " + number(s.mean_degree) + "\n";
  user += "- max degree: " + std::to_string(s.max_degree) + "\n";
  user += "- mean hyperedge size: " + number(s.mean_edge_size) + "\n";
  user += "- density of interactions: " + (s.doi ? number(*s.doi) : std::string("undefined")) + "\n";
  user += "- connected components: " + std::to_string(s.components) + "\n";
  user += "- degree distribution slope: " + (s.degree_slope ? number(*s.degree_slope) : std::string("undefined")) + "\n";
  user += "- attribute diversity per hyperedge: " + number(s.attribute_diversity) + "\n";
  if (!s.top_entities.empty()) user += "- highest-degree entities: " + join_ids(s.top_entities) + "\n";
  user +=
      "\nTask: Based on the analysis, choose one strategic directive that will most effectively improve the "
      "network's quality and realism.\n\n"
      "Decision: Output corresponding optimization suggestions. Choose one of INCREASE_CONNECTIONS, "
      "ENHANCE_DIVERSITY, REDUCE_CLUSTERING, MAINTAIN";
  if (ctx.suggestion_count > 0)
    user += ", and list up to " + std::to_string(ctx.suggestion_count) +
            " entity IDs to focus on as a bracketed list";
  user += ".";
  return {std::string(kOptimizerSystemPrompt), std::move(user)};
}

namespace {

// Integers in [begin, end) of `s`, in order.
std::vector<std::uint64_t> integers_in(std::string_view s) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (auto v = text::parse_uint(s.substr(i, j - i))) out.push_back(*v);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

// Integers of the first [...] or {...} group that holds any.
std::optional<std::vector<std::uint64_t>> first_bracketed(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '[' && s[i] != '{') continue;
    const char close = s[i] == '[' ? ']' : '}';
    const auto j = s.find(close, i + 1);
    if (j == std::string_view::npos) return std::nullopt;
    auto ints = integers_in(s.substr(i + 1, j - i - 1));
    if (!ints.empty()) return ints;
    i = j;
  }
  return std::nullopt;
}

// First run of integers separated by commas (and spaces).
std::vector<std::uint64_t> first_comma_run(std::string_view s) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back(*text::parse_uint(s.substr(i, j - i)));
    std::size_t k = j;
    while (k < s.size() && s[k] == ' ') ++k;
    if (k >= s.size() || s[k] != ',') break;
    ++k;
    while (k < s.size() && s[k] == ' ') ++k;
    if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k]))) break;
    i = k;
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Whole-word occurrence of `word` (already upper case) in `hay` (upper case);
// '_' counts as a word character.
bool has_word(const std::string& hay, std::string_view word) {
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  for (auto pos = hay.find(word); pos != std::string::npos; pos = hay.find(word, pos + 1)) {
    const bool left = pos == 0 || !is_word(hay[pos - 1]);
    const auto end = pos + word.size();
    const bool right = end >= hay.size() || !is_word(hay[end]);
    if (left && right) return true;
  }
  return false;
}

}  // namespace

CandidateHyperedge parse_generator_response(std::string_view text, NodeId center) {
  auto ints = first_bracketed(text);
  std::vector<std::uint64_t> ids = ints ? std::move(*ints) : first_comma_run(text);
  if (ids.empty()) throw ParseError("generator response holds no node list");
  ids.push_back(center);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return {std::move(ids), center, std::string(text::trim(text))};
}

ReviewDecision parse_reviewer_response(std::string_view text) {
  const auto u = upper(text);
  const bool approve = has_word(u, "APPROVE") || has_word(u, "APPROVED");
  const bool reject = has_word(u, "REJECT") || has_word(u, "REJECTED");
  return {approve && !reject ? Verdict::kApprove : Verdict::kReject, std::string(text::trim(text))};
}

RemovalDecision parse_remover_response(std::string_view text) {
  if (has_word(upper(text), "NONE")) return {};
  auto ints = integers_in(text);
  std::vector<EdgeIndex> idx(ints.begin(), ints.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return {std::move(idx)};
}

StrategyDirective parse_optimizer_response(std::string_view text) {
  const auto u = upper(text);
  std::optional<DirectiveKind> found;
  bool ambiguous = false;
  for (auto k : {DirectiveKind::kIncreaseConnections, DirectiveKind::kEnhanceDiversity,
                 DirectiveKind::kReduceClustering, DirectiveKind::kMaintain}) {
    std::string spaced(directive_name(k));
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    if (has_word(u, directive_name(k)) || has_word(u, spaced)) {
      if (found) ambiguous = true;
      found = k;
    }
  }
  StrategyDirective d;
  d.kind = found && !ambiguous ? *found : DirectiveKind::kMaintain;
  if (auto ints = first_bracketed(text)) d.focus_entities.assign(ints->begin(), ints->end());
  d.rationale = std::string(text::trim(text));
  return d;
}

AgentResult parse_response(AgentRole role, std::string_view text, NodeId center) {
  switch (role) {
    case AgentRole::kGenerator: return parse_generator_response(text, center);
    case AgentRole::kReviewer: return parse_reviewer_response(text);
    case AgentRole::kRemover: return parse_remover_response(text);
    case AgentRole::kOptimizer: return parse_optimizer_response(text);
  }
  throw InvalidArgumentError("unknown agent role");
}

}  // namespace hypergen
