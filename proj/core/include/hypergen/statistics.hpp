#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypergen/hypergraph.hpp"
#include "hypergen/profile.hpp"

namespace hypergen {

/// Global summary of a hypergraph, as shown to the optimizer role.
struct NetworkStatistics {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  double mean_degree = 0.0;
  std::size_t max_degree = 0;
  double mean_edge_size = 0.0;
  std::optional<double> doi;  // over all current edges; absent when m < 2
  std::size_t components = 0;  // of the clique expansion, isolated nodes included
  std::optional<double> degree_slope;
  double attribute_diversity = 0.0;  // distinct key=value pairs per edge, averaged
  std::vector<NodeId> top_entities;  // highest degree first, at most 10

  friend bool operator==(const NetworkStatistics&, const NetworkStatistics&) = default;
};

NetworkStatistics compute_network_statistics(const TemporalHypergraph& h,
                                             const std::vector<EntityProfile>& profiles);

}  // namespace hypergen
