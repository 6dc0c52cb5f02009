#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypergen/histogram.hpp"
#include "hypergen/hypergraph.hpp"
#include "hypergen/power_law.hpp"

namespace hypergen {

// Structural and dynamic statistics of a hypergraph. None of these mutate the
// graph; all are safe to run concurrently on a shared instance.

struct DegreeDistribution {
  DistributionHistogram histogram;  // nodes with degree >= 1
  std::size_t isolated_nodes = 0;   // nodes with degree 0, not in the histogram
};

DegreeDistribution degree_distribution(const TemporalHypergraph& h);

DistributionHistogram hyperedge_size_distribution(const TemporalHypergraph& h);

/// Sizes of all non-empty pairwise intersections |e_i ∩ e_j|, i < j. Only
/// pairs sharing a node are visited (through the inverted index).
DistributionHistogram intersection_size_distribution(const TemporalHypergraph& h);

/// For every `group_size`-subset of nodes that co-occurs in at least one
/// edge, the number of edges containing it.
DistributionHistogram group_degree_distribution(const TemporalHypergraph& h,
                                                std::size_t group_size = 2);

/// Largest `k` singular values of the incidence matrix, descending; k is
/// clipped to min(n, m). Golub-Kahan-Lanczos bidiagonalization with full
/// reorthogonalization over the sparse matrix, then one-sided Jacobi on the
/// small bidiagonal factor.
std::vector<double> singular_value_spectrum(const TemporalHypergraph& h, std::size_t k);

struct TemporalLocality {
  double mean = 0.0;
  // per_edge[t - 1]: fraction of edge t's nodes seen in the previous
  // min(t, window) edges, t = 1..m-1.
  std::vector<double> per_edge;
};

/// Windowed node reuse. Throws UndefinedMetricError when m < 2.
TemporalLocality temporal_locality(const TemporalHypergraph& h, std::size_t window = 10);

struct PersistenceDistribution {
  DistributionHistogram gaps;
  std::optional<PowerLawFit> fit;
  bool uses_timestamps = false;
};

/// Pooled gaps between each node's consecutive participations. Gaps are in
/// timestamp units for temporal graphs whose timestamps are not all equal,
/// otherwise in edge positions. Throws UndefinedMetricError when m < 2.
PersistenceDistribution persistence_interevent_distribution(const TemporalHypergraph& h);

struct DoiPoint {
  std::size_t t = 0;  // number of leading edges considered
  std::uint64_t intersecting_pairs = 0;
  std::uint64_t total_pairs = 0;  // t choose 2
  double doi = 0.0;

  friend bool operator==(const DoiPoint&, const DoiPoint&) = default;
};

using DoiSeries = std::vector<DoiPoint>;

/// Density of interactions of the first t edges at each checkpoint t.
/// Checkpoints must be ascending, each in [2, m]; otherwise throws
/// InvalidArgumentError.
DoiSeries density_of_interactions_series(const TemporalHypergraph& h,
                                         std::span<const std::size_t> checkpoints);

/// `count` checkpoints at fractions i/count of m (i = 1..count), each at
/// least 2, duplicates removed. Empty when m < 2.
std::vector<std::size_t> evenly_spaced_checkpoints(std::size_t m, std::size_t count);

}  // namespace hypergen
