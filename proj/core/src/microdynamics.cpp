#include "hypergen/microdynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypergen/error.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

RankedPopulation RankedPopulation::make(std::vector<NodeId> nodes, std::vector<std::size_t> ranks,
                                        std::vector<double> quality) {
  const auto n = nodes.size();
  if (ranks.size() != n || quality.size() != n)
    throw InvalidArgumentError("population fields have different lengths");
  std::vector<std::size_t> by_rank(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ranks[i] < 1 || ranks[i] > n || by_rank[ranks[i]] != n)
      throw InvalidArgumentError("ranks must be a permutation of 1..N");
    by_rank[ranks[i]] = i;
    if (!(quality[i] >= 0.0 && quality[i] <= 1.0)) throw InvalidArgumentError("quality must lie in [0, 1]");
  }
  for (std::size_t r = 2; r <= n; ++r) {
    if (quality[by_rank[r]] > quality[by_rank[r - 1]])
      throw InvalidArgumentError("quality must not increase with rank");
  }
  RankedPopulation pop;
  pop.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!pop.index_.emplace(nodes[i], i).second) throw InvalidArgumentError("duplicate node in population");
  }
  pop.nodes_ = std::move(nodes);
  pop.ranks_ = std::move(ranks);
  pop.quality_ = std::move(quality);
  return pop;
}

RankedPopulation RankedPopulation::with_default_quality(std::vector<NodeId> nodes, std::vector<std::size_t> ranks) {
  const auto n = static_cast<double>(nodes.size());
  std::vector<double> q;
  q.reserve(ranks.size());
  for (auto r : ranks) q.push_back(1.0 - (static_cast<double>(r) - 1.0) / n);
  return make(std::move(nodes), std::move(ranks), std::move(q));
}

RankedPopulation RankedPopulation::sequential(std::size_t n) {
  std::vector<NodeId> nodes(n);
  std::vector<std::size_t> ranks(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  std::iota(ranks.begin(), ranks.end(), std::size_t{1});
  return with_default_quality(std::move(nodes), std::move(ranks));
}

std::optional<std::size_t> RankedPopulation::index_of(NodeId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SizeSampler SizeSampler::fixed(std::size_t k) { return discrete({k}, {1.0}); }

SizeSampler SizeSampler::truncated_power_law(std::size_t min_size, std::size_t max_size, double exponent) {
  if (min_size > max_size) throw InvalidArgumentError("min size exceeds max size");
  std::vector<std::size_t> sizes;
  std::vector<double> weights;
  for (auto k = min_size; k <= max_size; ++k) {
    sizes.push_back(k);
    weights.push_back(std::pow(static_cast<double>(k), -exponent));
  }
  return discrete(std::move(sizes), std::move(weights));
}

SizeSampler SizeSampler::discrete(std::vector<std::size_t> sizes, std::vector<double> weights) {
  if (sizes.empty() || sizes.size() != weights.size())
    throw InvalidArgumentError("size distribution needs matching, non-empty sizes and weights");
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] < sizes[b]; });
  SizeSampler s;
  double acc = 0.0;
  for (auto i : order) {
    if (sizes[i] < 2) throw InvalidArgumentError("hyperedge sizes must be at least 2");
    if (!s.sizes_.empty() && s.sizes_.back() == sizes[i]) throw InvalidArgumentError("duplicate size in distribution");
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) throw InvalidArgumentError("size weights must be finite and >= 0");
    acc += weights[i];
    s.sizes_.push_back(sizes[i]);
    s.cumulative_.push_back(acc);
  }
  if (!(acc > 0.0)) throw InvalidArgumentError("size weights sum to zero");
  return s;
}

std::size_t SizeSampler::sample(Rng& rng) const {
  if (sizes_.size() == 1) return sizes_.front();
  return sizes_[rng.weighted_index(cumulative_)];
}

std::vector<double> SizeSampler::probabilities() const {
  std::vector<double> p(sizes_.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = (cumulative_[i] - prev) / cumulative_.back();
    prev = cumulative_[i];
  }
  return p;
}

void MicroParams::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgumentError("alpha must be >= 0");
  if (!(exponent_gamma > 0.0) || !std::isfinite(exponent_gamma)) throw InvalidArgumentError("exponent_gamma must be > 0");
  if (!(lambda_rate > 0.0) || !std::isfinite(lambda_rate)) throw InvalidArgumentError("lambda_rate must be > 0");
  if (!(horizon_T > 0.0) || !std::isfinite(horizon_T)) throw InvalidArgumentError("horizon_T must be > 0");
  if (!(q_threshold >= 0.0 && q_threshold < 1.0)) throw InvalidArgumentError("q_threshold must lie in [0, 1)");
}

double attachment_weight(std::size_t rank, const MicroParams& params) {
  return std::pow(static_cast<double>(rank) + params.alpha, -params.exponent_gamma);
}

namespace {

void check_index(const RankedPopulation& pop, std::size_t i) {
  if (i >= pop.size()) throw IndexError("population index " + std::to_string(i) + " out of range");
}

// Neumaier-compensated sum, so normalized probabilities add up to 1 tightly.
double stable_sum(const std::vector<double>& v) {
  double sum = 0.0, c = 0.0;
  for (double x : v) {
    const double t = sum + x;
    c += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + c;
}

}  // namespace

std::vector<double> reach_probabilities(const RankedPopulation& pop, const MicroParams& params) {
  std::vector<double> w(pop.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = attachment_weight(pop.rank(i), params);
  const double z = stable_sum(w);
  for (auto& x : w) x /= z;
  return w;
}

double reach_probability(const RankedPopulation& pop, const MicroParams& params, std::size_t i) {
  check_index(pop, i);
  return reach_probabilities(pop, params)[i];
}

std::vector<std::size_t> eligible_indices(const RankedPopulation& pop, const MicroParams& params) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pop.size(); ++i)
    if (pop.quality(i) > params.q_threshold) out.push_back(i);
  return out;
}

std::vector<double> selection_probabilities(const RankedPopulation& pop, const MicroParams& params) {
  std::vector<double> w(pop.size(), 0.0);
  bool any = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pop.quality(i) > params.q_threshold) {
      w[i] = attachment_weight(pop.rank(i), params);
      any = true;
    }
  }
  if (!any) throw EmptyEligibleSetError("no node passes the quality filter");
  const double z = stable_sum(w);
  for (auto& x : w) x /= z;
  return w;
}

double selection_probability(const RankedPopulation& pop, const MicroParams& params, std::size_t i) {
  check_index(pop, i);
  return selection_probabilities(pop, params)[i];
}

std::vector<double> expected_degree_profile(const RankedPopulation& pop, const MicroParams& params) {
  auto d = selection_probabilities(pop, params);
  const double total = params.lambda_rate * params.horizon_T;
  for (auto& x : d) x *= total;
  return d;
}

double harmonic_normalization_approx(std::size_t n, double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgumentError("approximation needs alpha > 0");
  return std::log((static_cast<double>(n) + alpha) / alpha);
}

std::vector<std::size_t> sample_without_replacement(const std::vector<double>& weights,
                                                    const std::vector<double>& cumulative, std::size_t count,
                                                    const std::vector<std::size_t>& exclude, Rng& rng) {
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  auto taken = [&](std::size_t i) {
    return std::find(chosen.begin(), chosen.end(), i) != chosen.end() ||
           std::find(exclude.begin(), exclude.end(), i) != exclude.end();
  };
  while (chosen.size() < count) {
    // Rejection against the cumulative table is exact for the renormalized
    // distribution; fall back to an explicit table when the blocked mass is large.
    bool drawn = false;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto i = rng.weighted_index(cumulative);
      if (!taken(i)) {
        chosen.push_back(i);
        drawn = true;
        break;
      }
    }
    if (drawn) continue;
    std::vector<double> rest(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!taken(i)) acc += weights[i];
      rest[i] = acc;
    }
    if (!(acc > 0.0)) throw EmptyEligibleSetError("not enough nodes with positive weight");
    chosen.push_back(rng.weighted_index(rest));
  }
  return chosen;
}

SimulationTrace simulate(const RankedPopulation& pop, const MicroParams& params, std::size_t num_edges,
                         std::uint64_t seed) {
  params.validate();
  SimulationTrace trace;
  trace.population = pop;
  trace.final_degrees.assign(pop.size(), 0);
  for (auto v : pop.nodes()) trace.hypergraph.add_node(v);

  const auto eligible = eligible_indices(pop, params);
  for (auto i : eligible) trace.eligible_set.push_back(pop.node(i));
  if (num_edges == 0) return trace;
  if (eligible.empty()) throw EmptyEligibleSetError("no node passes the quality filter");
  if (eligible.size() < params.size_sampler.max_size())
    throw InvalidArgumentError("eligible set (" + std::to_string(eligible.size()) +
                               ") smaller than the largest hyperedge size");

  const auto weights = selection_probabilities(pop, params);
  std::vector<double> cumulative(weights.size());
  std::partial_sum(weights.begin(), weights.end(), cumulative.begin());

  Rng rng(seed);
  std::vector<NodeId> members;
  for (std::size_t t = 0; t < num_edges; ++t) {
    const auto k = params.size_sampler.sample(rng);
    std::vector<std::size_t> picked;
    if (params.initiator == InitiatorPolicy::kUniform) {
      const auto initiator = eligible[rng.uniform_index(eligible.size())];
      picked = sample_without_replacement(weights, cumulative, k - 1, {initiator}, rng);
      picked.push_back(initiator);
    } else {
      picked = sample_without_replacement(weights, cumulative, k, {}, rng);
    }
    members.clear();
    for (auto i : picked) {
      members.push_back(pop.node(i));
      ++trace.final_degrees[i];
    }
    trace.hypergraph.add_hyperedge(Hyperedge::make(members, t));
  }
  return trace;
}

ZipfVerification verify_zipf_mandelbrot(const SimulationTrace& trace, const MicroParams& params,
                                        std::uint64_t min_degree) {
  const auto& pop = trace.population;
  if (trace.final_degrees.size() != pop.size()) throw InvalidArgumentError("trace degrees do not match population");
  ZipfVerification out;
  for (auto d : trace.final_degrees) out.total_selections += d;
  if (out.total_selections < kMinVerificationSelections)
    throw InsufficientDataError("verification needs at least 1000 selections, trace has " +
                                std::to_string(out.total_selections));

  const auto p = selection_probabilities(pop, params);
  double dev_sum = 0.0;
  std::size_t dev_count = 0;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const auto d = trace.final_degrees[i];
    if (p[i] > 0.0) {
      const double expected = p[i] * static_cast<double>(out.total_selections);
      const double dev = std::abs(static_cast<double>(d) - expected) / expected;
      out.max_relative_deviation = std::max(out.max_relative_deviation, dev);
      dev_sum += dev;
      ++dev_count;
    }
    if (d >= min_degree) {
      xs.push_back(static_cast<double>(pop.rank(i)) + params.alpha);
      ys.push_back(static_cast<double>(d));
    }
  }
  if (dev_count > 0) out.mean_relative_deviation = dev_sum / static_cast<double>(dev_count);
  out.nodes_fitted = xs.size();
  try {
    out.fit = fit_log_log(xs, ys);
  } catch (const UndefinedMetricError&) {
    out.fit.reset();
  }
  return out;
}

std::string trace_sidecar_csv(const SimulationTrace& trace) {
  std::string out = "node,rank,quality,final_degree\n";
  const auto& pop = trace.population;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    out += std::to_string(pop.node(i)) + ',' + std::to_string(pop.rank(i)) + ',' +
           text::format_double(pop.quality(i)) + ',' + std::to_string(trace.final_degrees[i]) + '\n';
  }
  return out;
}

}  // namespace hypergen
