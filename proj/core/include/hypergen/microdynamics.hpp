#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypergen/hypergraph.hpp"
#include "hypergen/power_law.hpp"
#include "hypergen/rng.hpp"

namespace hypergen {

/// Nodes with a quality rank (1 = best) and a quality score in [0, 1].
class RankedPopulation {
 public:
  RankedPopulation() = default;

  /// Validates that ranks are a permutation of 1..N, qualities lie in [0, 1]
  /// and never increase with rank, and node ids are distinct.
  static RankedPopulation make(std::vector<NodeId> nodes, std::vector<std::size_t> ranks,
                               std::vector<double> quality);
  /// Quality defaults to 1 - (rank - 1) / N.
  static RankedPopulation with_default_quality(std::vector<NodeId> nodes, std::vector<std::size_t> ranks);
  /// Nodes 0..n-1 with rank i + 1.
  static RankedPopulation sequential(std::size_t n);

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId node(std::size_t i) const { return nodes_.at(i); }
  std::size_t rank(std::size_t i) const { return ranks_.at(i); }
  double quality(std::size_t i) const { return quality_.at(i); }
  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  const std::vector<double>& qualities() const noexcept { return quality_; }
  std::optional<std::size_t> index_of(NodeId v) const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<std::size_t> ranks_;
  std::vector<double> quality_;
  std::unordered_map<NodeId, std::size_t> index_;
};

/// Discrete hyperedge-size distribution over sizes >= 2.
class SizeSampler {
 public:
  static SizeSampler fixed(std::size_t k);
  /// P(k) proportional to k^-exponent on [min_size, max_size].
  static SizeSampler truncated_power_law(std::size_t min_size, std::size_t max_size, double exponent);
  /// Explicit weights; sizes must be distinct and >= 2, weights >= 0 with a
  /// positive sum.
  static SizeSampler discrete(std::vector<std::size_t> sizes, std::vector<double> weights);

  std::size_t sample(Rng& rng) const;
  std::size_t min_size() const noexcept { return sizes_.front(); }
  std::size_t max_size() const noexcept { return sizes_.back(); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  /// Normalized probabilities aligned with sizes().
  std::vector<double> probabilities() const;

 private:
  SizeSampler() = default;
  std::vector<std::size_t> sizes_;  // ascending
  std::vector<double> cumulative_;
};

enum class InitiatorPolicy {
  kPreferential,  // every member drawn by the selection probabilities
  kUniform,       // initiator uniform over the eligible set, collaborators preferential
};

struct MicroParams {
  double alpha = 0.0;           // collaborative inertia, >= 0
  double exponent_gamma = 1.0;  // > 0
  double lambda_rate = 1.0;     // edges per unit time, > 0
  double q_threshold = 0.0;     // quality filter, in [0, 1)
  double horizon_T = 1.0;       // > 0
  SizeSampler size_sampler = SizeSampler::fixed(3);
  InitiatorPolicy initiator = InitiatorPolicy::kPreferential;

  /// Throws InvalidArgumentError on out-of-range fields.
  void validate() const;
};

// (r_i + alpha)^-gamma, unnormalized.
double attachment_weight(std::size_t rank, const MicroParams& params);

/// Attachment weight normalized over all nodes.
double reach_probability(const RankedPopulation& pop, const MicroParams& params, std::size_t i);
std::vector<double> reach_probabilities(const RankedPopulation& pop, const MicroParams& params);

/// Indices of nodes whose quality exceeds the threshold.
std::vector<std::size_t> eligible_indices(const RankedPopulation& pop, const MicroParams& params);

/// Attachment weight, zero on filtered nodes, renormalized over the eligible set.
/// Throws EmptyEligibleSetError when no node passes the filter.
double selection_probability(const RankedPopulation& pop, const MicroParams& params, std::size_t i);
std::vector<double> selection_probabilities(const RankedPopulation& pop, const MicroParams& params);

/// Stationary degrees lambda * T * selection_probability(i).
std::vector<double> expected_degree_profile(const RankedPopulation& pop, const MicroParams& params);

/// Large-N approximation ln((N + alpha) / alpha) of sum_r (r + alpha)^-1, for
/// cross-checking the exact normalization at gamma = 1 (alpha > 0).
double harmonic_normalization_approx(std::size_t n, double alpha);

/// Draws `count` distinct indices with probability proportional to
/// `weights`, renormalizing over the remaining ones after every draw.
/// `cumulative` are the inclusive prefix sums of `weights`. Indices in
/// `exclude` are never drawn.
std::vector<std::size_t> sample_without_replacement(const std::vector<double>& weights,
                                                    const std::vector<double>& cumulative, std::size_t count,
                                                    const std::vector<std::size_t>& exclude, Rng& rng);

struct SimulationTrace {
  RankedPopulation population;
  TemporalHypergraph hypergraph;            // contains every population node
  std::vector<std::uint64_t> final_degrees;  // aligned with population indices
  std::vector<NodeId> eligible_set;
};

/// Generates `num_edges` hyperedges; edge t has timestamp t.
SimulationTrace simulate(const RankedPopulation& pop, const MicroParams& params, std::size_t num_edges,
                         std::uint64_t seed);

struct ZipfVerification {
  std::optional<PowerLawFit> fit;    // log d on log(r + alpha), nodes with d >= min_degree
  std::size_t nodes_fitted = 0;
  std::uint64_t total_selections = 0;
  double max_relative_deviation = 0.0;   // over eligible nodes, vs. the expected (r + alpha)^-gamma degree profile
  double mean_relative_deviation = 0.0;  // scaled to the same total
};

inline constexpr std::uint64_t kMinVerificationSelections = 1000;

/// Throws InsufficientDataError with fewer than 10^3 selections in total.
ZipfVerification verify_zipf_mandelbrot(const SimulationTrace& trace, const MicroParams& params,
                                        std::uint64_t min_degree = 5);

/// `node,rank,quality,final_degree` rows with a header.
std::string trace_sidecar_csv(const SimulationTrace& trace);

}  // namespace hypergen
