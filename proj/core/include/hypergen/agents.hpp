#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypergen/hypergraph.hpp"
#include "hypergen/microdynamics.hpp"
#include "hypergen/profile.hpp"
#include "hypergen/statistics.hpp"

namespace hypergen {

enum class AgentRole { kGenerator, kReviewer, kRemover, kOptimizer };
std::string_view role_name(AgentRole role);

enum class DirectiveKind { kIncreaseConnections, kEnhanceDiversity, kReduceClustering, kMaintain };
std::string_view directive_name(DirectiveKind kind);
std::optional<DirectiveKind> directive_from_name(std::string_view name);

struct StrategyDirective {
  DirectiveKind kind = DirectiveKind::kMaintain;
  std::vector<NodeId> focus_entities;
  std::string rationale;

  friend bool operator==(const StrategyDirective&, const StrategyDirective&) = default;
};

struct CandidateHyperedge {
  std::vector<NodeId> nodes;  // sorted, unique, contains center
  NodeId center = 0;
  std::string justification;

  friend bool operator==(const CandidateHyperedge&, const CandidateHyperedge&) = default;
};

enum class Verdict { kApprove, kReject };

struct ReviewDecision {
  Verdict verdict = Verdict::kReject;
  std::string reason;

  friend bool operator==(const ReviewDecision&, const ReviewDecision&) = default;
};

/// Edge indices to prune; empty means "NONE".
struct RemovalDecision {
  std::vector<EdgeIndex> indices;

  friend bool operator==(const RemovalDecision&, const RemovalDecision&) = default;
};

using AgentResult = std::variant<CandidateHyperedge, ReviewDecision, RemovalDecision, StrategyDirective>;

// Contexts reference data owned by the caller; they must outlive the call.

struct GeneratorContext {
  std::string domain;
  const EntityProfile* center = nullptr;
  std::optional<LocalContext> local;
  std::size_t k = 0;
  std::optional<StrategyDirective> directive;  // absent during construction
  std::vector<NodeId> candidate_entities;      // ids the model may pick from
};

struct ReviewerContext {
  const CandidateHyperedge* candidate = nullptr;
  std::vector<const EntityProfile*> members;  // one per candidate node, when known
  std::optional<StrategyDirective> directive;
  const TemporalHypergraph* graph = nullptr;  // for duplicate checks
};

struct RemoverContext {
  const TemporalHypergraph* graph = nullptr;
  std::optional<StrategyDirective> directive;
  std::size_t max_listed_edges = 200;  // prompt lists the most recent edges only
};

struct OptimizerContext {
  std::optional<NetworkStatistics> statistics;
  std::size_t suggestion_count = 0;  // K
};

struct Prompt {
  std::string system;
  std::string user;

  friend bool operator==(const Prompt&, const Prompt&) = default;
};

inline constexpr std::string_view kGeneratorSystemPrompt =
    "You are a hypergraph relationship generator. Your task is to form a new collaborative group around a "
    "central entity.";
inline constexpr std::string_view kReviewerSystemPrompt =
    "You are a hypergraph relationship reviewer. Your task is to validate a candidate hyperedge.";
inline constexpr std::string_view kRemoverSystemPrompt =
    "You are a hypergraph network curator. Your task is to identify and remove redundant or low-quality "
    "hyperedges.";
inline constexpr std::string_view kOptimizerSystemPrompt =
    "You are a network strategy analyst. Your task is to assess the entire hypergraph and provide a strategic "
    "directive for the next evolution step.";

// Throw TemplateError naming the first missing field.
Prompt build_prompt(const GeneratorContext& ctx);
Prompt build_prompt(const ReviewerContext& ctx);
Prompt build_prompt(const RemoverContext& ctx);
Prompt build_prompt(const OptimizerContext& ctx);

/// First bracketed list of integers, else the first comma-separated run;
/// the center is always included. Throws ParseError when no integer is found.
CandidateHyperedge parse_generator_response(std::string_view text, NodeId center);
/// APPROVE only when that is the sole verdict token present.
ReviewDecision parse_reviewer_response(std::string_view text);
/// "NONE" or no integers -> empty.
RemovalDecision parse_remover_response(std::string_view text);
/// Exactly one directive keyword, else MAINTAIN; focus entities from the
/// first bracketed list.
StrategyDirective parse_optimizer_response(std::string_view text);

AgentResult parse_response(AgentRole role, std::string_view text, NodeId center = 0);

struct OracleSettings {
  double remove_fraction = 0.05;   // cap on pruned edges per step
  double diversity_target = 0.2;   // DoI above this asks for diversity
};

/// Decisions grounded in the ranked-population model; see oracle.cpp.
CandidateHyperedge oracle_generate(const GeneratorContext& ctx, const RankedPopulation& pop,
                                   const MicroParams& params, std::uint64_t seed);
ReviewDecision oracle_review(const ReviewerContext& ctx, const RankedPopulation& pop, const MicroParams& params);
RemovalDecision oracle_remove(const RemoverContext& ctx, const RankedPopulation& pop, const MicroParams& params,
                              const OracleSettings& settings);
StrategyDirective oracle_optimize(const OptimizerContext& ctx, const RankedPopulation& pop,
                                  const MicroParams& params, const OracleSettings& settings);

/// One implementation of the four roles.
class AgentBackend {
 public:
  virtual ~AgentBackend() = default;
  virtual CandidateHyperedge generate(const GeneratorContext& ctx, std::uint64_t seed) = 0;
  virtual ReviewDecision review(const ReviewerContext& ctx, std::uint64_t seed) = 0;
  virtual RemovalDecision remove(const RemoverContext& ctx, std::uint64_t seed) = 0;
  virtual StrategyDirective optimize(const OptimizerContext& ctx, std::uint64_t seed) = 0;
};

class OracleBackend final : public AgentBackend {
 public:
  OracleBackend(RankedPopulation pop, MicroParams params, OracleSettings settings = {});

  CandidateHyperedge generate(const GeneratorContext& ctx, std::uint64_t seed) override;
  ReviewDecision review(const ReviewerContext& ctx, std::uint64_t seed) override;
  RemovalDecision remove(const RemoverContext& ctx, std::uint64_t seed) override;
  StrategyDirective optimize(const OptimizerContext& ctx, std::uint64_t seed) override;

  const RankedPopulation& population() const noexcept { return pop_; }
  const MicroParams& params() const noexcept { return params_; }

 private:
  RankedPopulation pop_;
  MicroParams params_;
  OracleSettings settings_;
  std::vector<double> weights_;  // selection probabilities, computed on first use
  std::vector<double> cumulative_;
};

}  // namespace hypergen
