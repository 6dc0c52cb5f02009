#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

namespace hypergen {

using NodeId = std::uint64_t;
using EdgeIndex = std::size_t;
using Timestamp = std::uint64_t;

/// A timestamped group interaction. Nodes are kept sorted and unique.
struct Hyperedge {
  std::vector<NodeId> nodes;
  Timestamp timestamp = 0;

  /// Sorts and deduplicates `nodes`; throws InvalidEdgeError when empty.
  static Hyperedge make(std::vector<NodeId> nodes, Timestamp timestamp);

  std::size_t size() const noexcept { return nodes.size(); }
  bool contains(NodeId v) const noexcept;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

struct ContextEdge {
  EdgeIndex index;
  std::vector<NodeId> nodes;
};

/// The edges around one node, most recent first.
struct LocalContext {
  NodeId node = 0;
  std::size_t degree = 0;
  std::vector<ContextEdge> recent_edges;
};

/// Sparse n x m binary incidence matrix with rows in ascending NodeId order.
struct IncidenceMatrix {
  std::vector<NodeId> row_nodes;
  std::vector<std::vector<std::size_t>> columns;  // row indices, ascending

  std::size_t rows() const noexcept { return row_nodes.size(); }
  std::size_t cols() const noexcept { return columns.size(); }
  std::vector<std::size_t> row_sums() const;
  std::vector<std::size_t> column_sums() const;

  // y = M x  (x has cols() entries, y has rows()).
  void multiply(std::span<const double> x, std::span<double> y) const;
  // y = M^T x  (x has rows() entries, y has cols()).
  void multiply_transposed(std::span<const double> x, std::span<double> y) const;
};

/// Ordered multiset of hyperedges over a set of nodes. Edge identity is the
/// position in the list; the node set only grows except through compaction.
///
/// Mutation requires exclusive access; const member functions may be called
/// concurrently once mutation has stopped.
class TemporalHypergraph {
 public:
  TemporalHypergraph() = default;

  /// Appends `e`, registering any new nodes. Returns the new edge's index.
  EdgeIndex add_hyperedge(Hyperedge e);
  /// Appends an edge stamped with its own index.
  EdgeIndex add_hyperedge(std::vector<NodeId> nodes);
  void add_node(NodeId v);

  /// Removes the given edges (duplicates in `indices` are ignored). Throws
  /// IndexError without modifying anything if an index is out of range.
  std::size_t remove_hyperedges(std::span<const EdgeIndex> indices);

  std::size_t degree(NodeId v) const;
  std::span<const EdgeIndex> incident_edges(NodeId v) const;
  LocalContext local_context(NodeId v, std::size_t max_edges) const;
  IncidenceMatrix incidence_matrix() const;

  const std::set<NodeId>& nodes() const noexcept { return nodes_; }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const Hyperedge& edge(EdgeIndex i) const { return edges_.at(i); }
  bool contains_node(NodeId v) const { return nodes_.count(v) != 0; }
  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  // Whether timestamps carry information. Graphs loaded from files without
  // timestamps are non-temporal; their edges are stamped with their index.
  bool is_temporal() const noexcept { return temporal_; }
  void set_temporal(bool temporal) noexcept { temporal_ = temporal; }

  Timestamp max_timestamp() const noexcept;

  /// Copy with nodes renumbered 0..n-1 in ascending order of old id.
  /// `old_ids`, when given, receives the old id of each new id.
  TemporalHypergraph compacted(std::vector<NodeId>* old_ids = nullptr) const;

  friend bool operator==(const TemporalHypergraph& a, const TemporalHypergraph& b) {
    return a.temporal_ == b.temporal_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  void index_edge(EdgeIndex i);
  void rebuild_index();

  bool temporal_ = true;
  std::set<NodeId> nodes_;
  std::vector<Hyperedge> edges_;
  std::unordered_map<NodeId, std::vector<EdgeIndex>> postings_;
};

}  // namespace hypergen
