#include "hypergen/patterns.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "hypergen/error.hpp"

namespace hypergen {

DegreeDistribution degree_distribution(const TemporalHypergraph& h) {
  DegreeDistribution out;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto v : h.nodes()) {
    const auto d = h.degree(v);
    if (d == 0)
      ++out.isolated_nodes;
    else
      ++counts[d];
  }
  out.histogram = DistributionHistogram(counts);
  return out;
}

DistributionHistogram hyperedge_size_distribution(const TemporalHypergraph& h) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& e : h.edges()) ++counts[e.size()];
  return DistributionHistogram(counts);
}

DistributionHistogram intersection_size_distribution(const TemporalHypergraph& h) {
  const auto m = h.num_edges();
  std::map<std::uint64_t, std::uint64_t> counts;
  std::vector<std::uint32_t> shared(m, 0);
  std::vector<EdgeIndex> touched;
  for (EdgeIndex i = 0; i < m; ++i) {
    for (auto v : h.edge(i).nodes) {
      const auto post = h.incident_edges(v);
      // Postings are ascending; only partners after i, so each pair is seen once.
      for (auto it = std::upper_bound(post.begin(), post.end(), i); it != post.end(); ++it) {
        if (shared[*it]++ == 0) touched.push_back(*it);
      }
    }
    for (auto j : touched) {
      ++counts[shared[j]];
      shared[j] = 0;
    }
    touched.clear();
  }
  return DistributionHistogram(counts);
}

namespace {

struct NodeSetHash {
  std::size_t operator()(const std::vector<NodeId>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Visits every `size`-combination of `items` (ascending), in lexicographic order.
template <typename Visit>
void for_each_combination(const std::vector<NodeId>& items, std::size_t size, Visit&& visit) {
  const std::size_t n = items.size();
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  std::vector<NodeId> combo(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) combo[i] = items[idx[i]];
    visit(combo);
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

constexpr double kMaxGroupSubsets = 5e7;

}  // namespace

DistributionHistogram group_degree_distribution(const TemporalHypergraph& h, std::size_t group_size) {
  if (group_size < 2) throw InvalidArgumentError("group size must be at least 2");
  double budget = 0.0;
  for (const auto& e : h.edges()) budget += binomial(e.size(), group_size);
  if (budget > kMaxGroupSubsets)
    throw UndefinedMetricError("group degree enumeration too large (" +
                               std::to_string(static_cast<long long>(budget)) + " subsets)");

  std::map<std::uint64_t, std::uint64_t> counts;
  if (group_size == 2) {
    std::unordered_map<std::uint64_t, std::uint64_t> pair_degree;
    // Dense pair keys over compact row ids.
    std::unordered_map<NodeId, std::uint64_t> row;
    std::uint64_t next = 0;
    for (auto v : h.nodes()) row.emplace(v, next++);
    pair_degree.reserve(static_cast<std::size_t>(std::min(budget, 1e6)));
    for (const auto& e : h.edges()) {
      for (std::size_t a = 0; a < e.nodes.size(); ++a)
        for (std::size_t b = a + 1; b < e.nodes.size(); ++b)
          ++pair_degree[row.at(e.nodes[a]) * next + row.at(e.nodes[b])];
    }
    for (const auto& [key, deg] : pair_degree) ++counts[deg];
  } else {
    std::unordered_map<std::vector<NodeId>, std::uint64_t, NodeSetHash> subset_degree;
    for (const auto& e : h.edges())
      for_each_combination(e.nodes, group_size, [&](const std::vector<NodeId>& c) { ++subset_degree[c]; });
    for (const auto& [key, deg] : subset_degree) ++counts[deg];
  }
  return DistributionHistogram(counts);
}

TemporalLocality temporal_locality(const TemporalHypergraph& h, std::size_t window) {
  if (window == 0) throw InvalidArgumentError("locality window must be at least 1");
  const auto m = h.num_edges();
  if (m < 2) throw UndefinedMetricError("temporal locality needs at least two edges");

  TemporalLocality out;
  out.per_edge.reserve(m - 1);
  std::unordered_map<NodeId, std::uint32_t> in_window;
  const auto& edges = h.edges();
  for (auto v : edges[0].nodes) ++in_window[v];
  double sum = 0.0;
  for (std::size_t t = 1; t < m; ++t) {
    std::size_t seen = 0;
    for (auto v : edges[t].nodes) {
      auto it = in_window.find(v);
      if (it != in_window.end() && it->second > 0) ++seen;
    }
    const double frac = static_cast<double>(seen) / static_cast<double>(edges[t].size());
    out.per_edge.push_back(frac);
    sum += frac;

    for (auto v : edges[t].nodes) ++in_window[v];
    if (t >= window) {
      for (auto v : edges[t - window].nodes) --in_window[v];
    }
  }
  out.mean = sum / static_cast<double>(m - 1);
  return out;
}

PersistenceDistribution persistence_interevent_distribution(const TemporalHypergraph& h) {
  const auto m = h.num_edges();
  if (m < 2) throw UndefinedMetricError("persistence needs at least two edges");
  const auto& edges = h.edges();

  PersistenceDistribution out;
  if (h.is_temporal()) {
    for (const auto& e : edges) {
      if (e.timestamp != edges.front().timestamp) {
        out.uses_timestamps = true;
        break;
      }
    }
  }

  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto v : h.nodes()) {
    const auto post = h.incident_edges(v);
    if (post.size() < 2) continue;
    if (out.uses_timestamps) {
      std::vector<Timestamp> times;
      times.reserve(post.size());
      for (auto i : post) times.push_back(edges[i].timestamp);
      std::sort(times.begin(), times.end());
      for (std::size_t k = 1; k < times.size(); ++k) ++counts[times[k] - times[k - 1]];
    } else {
      for (std::size_t k = 1; k < post.size(); ++k) ++counts[post[k] - post[k - 1]];
    }
  }
  out.gaps = DistributionHistogram(counts);
  try {
    if (out.gaps.distinct_values() >= 2) out.fit = fit_power_law(out.gaps);
  } catch (const UndefinedMetricError&) {
    out.fit.reset();
  }
  return out;
}

DoiSeries density_of_interactions_series(const TemporalHypergraph& h,
                                         std::span<const std::size_t> checkpoints) {
  const auto m = h.num_edges();
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const auto c = checkpoints[i];
    if (c < 2) throw InvalidArgumentError("DoI checkpoint must be at least 2, got " + std::to_string(c));
    if (c > m) throw InvalidArgumentError("DoI checkpoint " + std::to_string(c) + " exceeds m=" + std::to_string(m));
    if (i > 0 && c <= checkpoints[i - 1]) throw InvalidArgumentError("DoI checkpoints must be strictly ascending");
  }

  DoiSeries out;
  out.reserve(checkpoints.size());
  if (checkpoints.empty()) return out;

  // stamp[j] == t + 1 marks edge j as already counted against edge t.
  std::vector<std::size_t> stamp(m, 0);
  std::uint64_t intersecting = 0;
  std::size_t next = 0;
  const auto last = checkpoints.back();
  for (std::size_t t = 0; t < last; ++t) {
    for (auto v : h.edge(t).nodes) {
      for (auto j : h.incident_edges(v)) {
        if (j >= t) break;
        if (stamp[j] != t + 1) {
          stamp[j] = t + 1;
          ++intersecting;
        }
      }
    }
    const std::size_t seen = t + 1;
    if (seen == checkpoints[next]) {
      const std::uint64_t pairs = static_cast<std::uint64_t>(seen) * (seen - 1) / 2;
      out.push_back({seen, intersecting, pairs,
                     static_cast<double>(intersecting) / static_cast<double>(pairs)});
      ++next;
    }
  }
  return out;
}

std::vector<std::size_t> evenly_spaced_checkpoints(std::size_t m, std::size_t count) {
  std::vector<std::size_t> out;
  if (m < 2 || count == 0) return out;
  for (std::size_t i = 1; i <= count; ++i) {
    auto c = static_cast<std::size_t>((static_cast<double>(m) * static_cast<double>(i)) /
                                          static_cast<double>(count) + 0.5);
    c = std::clamp<std::size_t>(c, 2, m);
    if (out.empty() || c > out.back()) out.push_back(c);
  }
  return out;
}

}  // namespace hypergen
