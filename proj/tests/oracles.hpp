#pragma once

// Slow, obviously-correct reference implementations used to check the
// library's fast paths. Nothing here shares code with the library beyond the
// hypergraph container itself.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hypergen/hypergraph.hpp"

namespace oracle {

using hypergen::NodeId;
using hypergen::TemporalHypergraph;

// Random hypergraph over nodes 0..n-1 with m edges of size 1..max_k.
inline TemporalHypergraph random_hypergraph(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t max_k) {
  std::mt19937_64 gen(seed);
  TemporalHypergraph h;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = 1 + gen() % std::min(max_k, n);
    std::set<NodeId> members;
    while (members.size() < k) members.insert(gen() % n);
    h.add_hyperedge(std::vector<NodeId>(members.begin(), members.end()));
  }
  return h;
}

// `count` draws from P(x) proportional to x^exponent on 1..max_value, by
// inverse CDF over the exact discrete distribution.
inline std::vector<std::uint64_t> power_law_samples(double exponent, std::size_t count, std::uint64_t seed,
                                                    std::uint64_t max_value = 100000) {
  std::vector<double> cdf(max_value);
  double acc = 0;
  for (std::uint64_t x = 1; x <= max_value; ++x) cdf[x - 1] = acc += std::pow(static_cast<double>(x), exponent);
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * acc;
    out.push_back(static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) + 1);
  }
  return out;
}

inline std::size_t intersection(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t c = 0;
  for (auto x : a)
    for (auto y : b)
      if (x == y) ++c;
  return c;
}

// value -> count over all pairs i < j with a non-empty intersection.
inline std::map<std::uint64_t, std::uint64_t> intersection_sizes(const TemporalHypergraph& h) {
  std::map<std::uint64_t, std::uint64_t> out;
  const auto& e = h.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (auto c = intersection(e[i].nodes, e[j].nodes)) ++out[c];
  return out;
}

// For every node pair, count edges containing both; histogram of positive counts.
inline std::map<std::uint64_t, std::uint64_t> pair_degrees(const TemporalHypergraph& h) {
  std::map<std::uint64_t, std::uint64_t> out;
  std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      std::uint64_t d = 0;
      for (const auto& e : h.edges())
        if (std::count(e.nodes.begin(), e.nodes.end(), nodes[a]) && std::count(e.nodes.begin(), e.nodes.end(), nodes[b])) ++d;
      if (d) ++out[d];
    }
  }
  return out;
}

// Intersecting pairs among the first t edges, as an exact count.
inline std::uint64_t intersecting_pairs(const TemporalHypergraph& h, std::size_t t) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (intersection(h.edge(i).nodes, h.edge(j).nodes) > 0) ++c;
  return c;
}

// Dense n x m incidence matrix, rows in ascending node order.
inline Eigen::MatrixXd dense_incidence(const TemporalHypergraph& h) {
  std::vector<NodeId> nodes(h.nodes().begin(), h.nodes().end());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nodes.size()),
                                            static_cast<Eigen::Index>(h.num_edges()));
  for (std::size_t j = 0; j < h.num_edges(); ++j)
    for (auto v : h.edge(j).nodes) {
      const auto i = std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin();
      a(i, static_cast<Eigen::Index>(j)) = 1.0;
    }
  return a;
}

inline std::vector<double> dense_singular_values(const TemporalHypergraph& h) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense_incidence(h));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

}  // namespace oracle
