#include "hypergen/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "hypergen/error.hpp"
#include "hypergen/patterns.hpp"

namespace hypergen {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

NetworkStatistics compute_network_statistics(const TemporalHypergraph& h,
                                             const std::vector<EntityProfile>& profiles) {
  NetworkStatistics s;
  s.num_nodes = h.num_nodes();
  s.num_edges = h.num_edges();
  if (s.num_nodes == 0) return s;

  std::unordered_map<NodeId, std::size_t> row;
  std::vector<std::pair<std::size_t, NodeId>> by_degree;
  std::size_t incidences = 0;
  for (auto v : h.nodes()) {
    row.emplace(v, row.size());
    const auto d = h.degree(v);
    s.max_degree = std::max(s.max_degree, d);
    incidences += d;
    if (d > 0) by_degree.emplace_back(d, v);
  }
  s.mean_degree = static_cast<double>(incidences) / static_cast<double>(s.num_nodes);
  std::sort(by_degree.begin(), by_degree.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  for (std::size_t i = 0; i < by_degree.size() && i < 10; ++i) s.top_entities.push_back(by_degree[i].second);

  // Clique expansion connectivity: chaining each edge's members is enough.
  UnionFind uf(s.num_nodes);
  std::size_t components = s.num_nodes;
  for (const auto& e : h.edges())
    for (std::size_t i = 1; i < e.nodes.size(); ++i)
      if (uf.unite(row.at(e.nodes[0]), row.at(e.nodes[i]))) --components;
  s.components = components;

  if (s.num_edges == 0) return s;
  s.mean_edge_size = static_cast<double>(incidences) / static_cast<double>(s.num_edges);
  if (s.num_edges >= 2) {
    const std::size_t all[] = {s.num_edges};
    s.doi = density_of_interactions_series(h, all).front().doi;
  }
  try {
    s.degree_slope = fit_power_law(degree_distribution(h).histogram).slope;
  } catch (const UndefinedMetricError&) {
  }

  std::unordered_map<NodeId, const EntityProfile*> profile_of;
  for (const auto& p : profiles) profile_of.emplace(p.id, &p);
  double diversity = 0.0;
  std::set<std::pair<std::string, std::string>> distinct;
  for (const auto& e : h.edges()) {
    distinct.clear();
    for (auto v : e.nodes) {
      auto it = profile_of.find(v);
      if (it == profile_of.end()) continue;
      for (const auto& kv : it->second->attributes) distinct.insert(kv);
    }
    diversity += static_cast<double>(distinct.size());
  }
  s.attribute_diversity = diversity / static_cast<double>(s.num_edges);
  return s;
}

}  // namespace hypergen
