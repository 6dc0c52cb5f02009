#include "hypergen/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hypergen/error.hpp"

namespace hypergen {

Hyperedge Hyperedge::make(std::vector<NodeId> nodes, Timestamp timestamp) {
  if (nodes.empty()) throw InvalidEdgeError("hyperedge must contain at least one node");
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return Hyperedge{std::move(nodes), timestamp};
}

bool Hyperedge::contains(NodeId v) const noexcept {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

std::vector<std::size_t> IncidenceMatrix::row_sums() const {
  std::vector<std::size_t> sums(rows(), 0);
  for (const auto& col : columns)
    for (auto r : col) ++sums[r];
  return sums;
}

std::vector<std::size_t> IncidenceMatrix::column_sums() const {
  std::vector<std::size_t> sums;
  sums.reserve(cols());
  for (const auto& col : columns) sums.push_back(col.size());
  return sums;
}

void IncidenceMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    for (auto r : columns[j]) y[r] += xj;
  }
}

void IncidenceMatrix::multiply_transposed(std::span<const double> x, std::span<double> y) const {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    double s = 0.0;
    for (auto r : columns[j]) s += x[r];
    y[j] = s;
  }
}

EdgeIndex TemporalHypergraph::add_hyperedge(Hyperedge e) {
  if (e.nodes.empty()) throw InvalidEdgeError("hyperedge must contain at least one node");
  if (!std::is_sorted(e.nodes.begin(), e.nodes.end()) ||
      std::adjacent_find(e.nodes.begin(), e.nodes.end()) != e.nodes.end()) {
    e = Hyperedge::make(std::move(e.nodes), e.timestamp);
  }
  edges_.push_back(std::move(e));
  const EdgeIndex i = edges_.size() - 1;
  index_edge(i);
  return i;
}

EdgeIndex TemporalHypergraph::add_hyperedge(std::vector<NodeId> nodes) {
  return add_hyperedge(Hyperedge::make(std::move(nodes), edges_.size()));
}

void TemporalHypergraph::add_node(NodeId v) { nodes_.insert(v); }

std::size_t TemporalHypergraph::remove_hyperedges(std::span<const EdgeIndex> indices) {
  if (indices.empty()) return 0;
  for (auto i : indices) {
    if (i >= edges_.size())
      throw IndexError("edge index " + std::to_string(i) + " out of range (m=" +
                       std::to_string(edges_.size()) + ")");
  }
  std::vector<bool> doomed(edges_.size(), false);
  std::size_t removed = 0;
  for (auto i : indices) {
    if (!doomed[i]) {
      doomed[i] = true;
      ++removed;
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (doomed[i]) continue;
    if (out != i) edges_[out] = std::move(edges_[i]);
    ++out;
  }
  edges_.resize(out);
  rebuild_index();
  return removed;
}

std::size_t TemporalHypergraph::degree(NodeId v) const {
  auto it = postings_.find(v);
  return it == postings_.end() ? 0 : it->second.size();
}

std::span<const EdgeIndex> TemporalHypergraph::incident_edges(NodeId v) const {
  auto it = postings_.find(v);
  if (it == postings_.end()) return {};
  return it->second;
}

LocalContext TemporalHypergraph::local_context(NodeId v, std::size_t max_edges) const {
  LocalContext ctx;
  ctx.node = v;
  const auto incident = incident_edges(v);
  ctx.degree = incident.size();
  const std::size_t take = std::min(max_edges, incident.size());
  ctx.recent_edges.reserve(take);
  for (std::size_t k = 0; k < take; ++k) {
    const EdgeIndex i = incident[incident.size() - 1 - k];
    ctx.recent_edges.push_back({i, edges_[i].nodes});
  }
  return ctx;
}

IncidenceMatrix TemporalHypergraph::incidence_matrix() const {
  IncidenceMatrix m;
  m.row_nodes.assign(nodes_.begin(), nodes_.end());
  std::unordered_map<NodeId, std::size_t> row_of;
  row_of.reserve(m.row_nodes.size());
  for (std::size_t r = 0; r < m.row_nodes.size(); ++r) row_of.emplace(m.row_nodes[r], r);
  m.columns.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::vector<std::size_t> col;
    col.reserve(e.nodes.size());
    // Edge nodes are ascending, so rows come out ascending too.
    for (auto v : e.nodes) col.push_back(row_of.at(v));
    m.columns.push_back(std::move(col));
  }
  return m;
}

Timestamp TemporalHypergraph::max_timestamp() const noexcept {
  Timestamp t = 0;
  for (const auto& e : edges_) t = std::max(t, e.timestamp);
  return t;
}

TemporalHypergraph TemporalHypergraph::compacted(std::vector<NodeId>* old_ids) const {
  std::unordered_map<NodeId, NodeId> renumber;
  renumber.reserve(nodes_.size());
  NodeId next = 0;
  for (auto v : nodes_) renumber.emplace(v, next++);

  TemporalHypergraph out;
  out.temporal_ = temporal_;
  for (NodeId v = 0; v < next; ++v) out.nodes_.insert(v);
  for (const auto& e : edges_) {
    Hyperedge ne;
    ne.timestamp = e.timestamp;
    ne.nodes.reserve(e.nodes.size());
    for (auto v : e.nodes) ne.nodes.push_back(renumber.at(v));
    out.edges_.push_back(std::move(ne));
  }
  out.rebuild_index();
  if (old_ids) old_ids->assign(nodes_.begin(), nodes_.end());
  return out;
}

void TemporalHypergraph::index_edge(EdgeIndex i) {
  for (auto v : edges_[i].nodes) {
    nodes_.insert(v);
    postings_[v].push_back(i);
  }
}

void TemporalHypergraph::rebuild_index() {
  postings_.clear();
  for (EdgeIndex i = 0; i < edges_.size(); ++i) index_edge(i);
}

}  // namespace hypergen
