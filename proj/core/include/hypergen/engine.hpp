#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergen/agents.hpp"
#include "hypergen/error.hpp"
#include "hypergen/hypergraph.hpp"
#include "hypergen/microdynamics.hpp"
#include "hypergen/profile.hpp"
#include "hypergen/report.hpp"
#include "hypergen/rng.hpp"
#include "hypergen/statistics.hpp"

namespace hypergen {

enum class BackendKind { kOracle, kRemote };

struct GenerationConfig {
  std::size_t num_nodes = 500;           // synthetic profiles when none are given
  std::size_t target_edges = 5000;       // construction attempts M
  double attach_probability = 0.85;      // P
  std::optional<SizeSampler> size_spec;  // explicit size distribution
  std::size_t min_edge_size = 2;
  std::size_t max_edge_size = 10;
  double size_exponent = 2.5;            // default sampler: k^-exponent on [min, max]
  std::size_t optimizer_suggestion_count = 5;  // K
  std::size_t evolution_steps = 0;
  std::size_t generation_attempts_per_step = 10;
  std::uint64_t seed = 42;
  std::string domain_label = "collaboration";
  BackendKind backend = BackendKind::kOracle;

  double focus_bias = 0.5;             // chance of taking the center from the directive's entities
  std::size_t local_context_edges = 10;
  std::size_t duplicate_window = 100;  // recent edges checked for exact duplicates
  std::size_t candidate_pool = 30;     // entity ids offered to the generator prompt

  // Ranked-population model behind the oracle backend.
  double oracle_alpha = 1.0;
  double oracle_gamma = 1.5;
  double quality_threshold = 0.0;
  double remove_fraction = 0.05;
  double diversity_target = 0.2;

  /// Throws InvalidArgumentError when a field is out of range.
  void validate() const;
};

/// key=value lines (`#` comments, blank lines ignored); keys are the field
/// names above plus `backend=oracle|remote` and `size_spec=2:0.5,3:0.5`.
/// Unknown keys and malformed values throw ParseError.
GenerationConfig parse_generation_config(std::string_view text, GenerationConfig base = {});
GenerationConfig read_generation_config(const std::string& path, GenerationConfig base = {});
std::string serialize_generation_config(const GenerationConfig& config);

/// Ranks from a `rank` attribute when every profile has one and they form a
/// permutation of 1..N; otherwise profile order. Default qualities.
RankedPopulation population_from_profiles(const std::vector<EntityProfile>& profiles);
MicroParams oracle_params(const GenerationConfig& config);
OracleSettings oracle_settings(const GenerationConfig& config);

/// Center selection; `directive` focus entities (those in V) are tried first
/// with probability focus_bias. Throws InvalidArgumentError when V is empty.
NodeId select_entity(const TemporalHypergraph& h, const GenerationConfig& config,
                     const StrategyDirective* directive, Rng& rng);

SizeSampler effective_size_sampler(const GenerationConfig& config);
std::size_t determine_hyperedge_size(const GenerationConfig& config, Rng& rng);

struct ValidationResult {
  bool accepted = false;
  std::string reason;  // "unknown node", "size", "center", "duplicate"; empty when accepted
};

ValidationResult validate_candidate(const CandidateHyperedge& cand, const TemporalHypergraph& h,
                                    const GenerationConfig& config);

struct ConstructResult {
  TemporalHypergraph graph;
  std::size_t attempts = 0;
  std::size_t accepted = 0;
  std::size_t discarded = 0;   // unparsable or invalid candidates
  std::string aborted_reason;  // non-empty when the backend failed for good
};

/// Iterative local generation over the profiles' nodes; M attempts, each
/// inserting at most one edge with timestamp = insertion index.
ConstructResult construct(const std::vector<EntityProfile>& profiles, const GenerationConfig& config,
                          AgentBackend& backend);

struct StepRecord {
  std::size_t step = 0;
  std::size_t edges_before = 0;
  std::size_t removed = 0;
  std::size_t proposed = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;   // reviewer said REJECT
  std::size_t discarded = 0;  // unparsable, invalid, or duplicate within the step
  std::size_t edges_after = 0;
  std::size_t optimizer_calls = 0;
  std::size_t remover_calls = 0;
  DirectiveKind directive = DirectiveKind::kMaintain;
  std::optional<double> doi_after;
};

struct EvolutionState {
  TemporalHypergraph graph;
  std::size_t step = 0;
  std::optional<StrategyDirective> last_directive;
  std::size_t total_removed = 0;
  std::size_t total_accepted = 0;
  std::size_t total_rejected = 0;
  std::size_t total_discarded = 0;
  std::vector<StepRecord> history;
};

/// Evolution-step failure; step() is the 1-based step that failed.
class EvolutionError : public Error {
 public:
  EvolutionError(std::size_t step, const std::string& what)
      : Error("evolution step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// One round of optimize, remove, generate, review, merge. The input state is
/// never modified, so a failure leaves the caller's state intact.
EvolutionState evolve_step(const EvolutionState& state, AgentBackend& backend,
                           const std::vector<EntityProfile>& profiles, const GenerationConfig& config);

struct EvolveResult {
  EvolutionState state;
  PatternReport report;
};

/// Runs evolution_steps rounds from h0 and measures the final graph
/// (against `reference` when given). Step failures become EvolutionError.
EvolveResult evolve(const TemporalHypergraph& h0, const std::vector<EntityProfile>& profiles,
                    const GenerationConfig& config, AgentBackend& backend,
                    const TemporalHypergraph* reference = nullptr, const ReportConfig& report_config = {});

/// One row per step with a header.
std::string counters_csv(const EvolutionState& state);

}  // namespace hypergen
