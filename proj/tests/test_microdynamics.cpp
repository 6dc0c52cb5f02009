#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hypergen/error.hpp"
#include "hypergen/microdynamics.hpp"
#include "hypergen/text.hpp"

using namespace hypergen;

namespace {

MicroParams params(double alpha, double gamma, double q = 0.0) {
  MicroParams p;
  p.alpha = alpha;
  p.exponent_gamma = gamma;
  p.q_threshold = q;
  return p;
}

}  // namespace

TEST(RankedPopulation, Validation) {
  EXPECT_NO_THROW(RankedPopulation::make({7, 8, 9}, {2, 1, 3}, {0.5, 0.9, 0.1}));
  EXPECT_THROW(RankedPopulation::make({7, 8, 9}, {1, 1, 3}, {0.9, 0.9, 0.1}), InvalidArgumentError);
  EXPECT_THROW(RankedPopulation::make({7, 8, 9}, {1, 2, 4}, {0.9, 0.5, 0.1}), InvalidArgumentError);
  EXPECT_THROW(RankedPopulation::make({7, 8, 9}, {1, 2, 3}, {0.1, 0.5, 0.9}), InvalidArgumentError);
  EXPECT_THROW(RankedPopulation::make({7, 8, 9}, {1, 2, 3}, {1.5, 0.5, 0.1}), InvalidArgumentError);
  EXPECT_THROW(RankedPopulation::make({7, 7, 9}, {1, 2, 3}, {0.9, 0.5, 0.1}), InvalidArgumentError);
  EXPECT_THROW(RankedPopulation::make({7, 8}, {1, 2, 3}, {0.9, 0.5, 0.1}), InvalidArgumentError);

  auto p = RankedPopulation::with_default_quality({10, 20, 30, 40}, {4, 3, 2, 1});
  EXPECT_DOUBLE_EQ(p.quality(0), 0.25);
  EXPECT_DOUBLE_EQ(p.quality(3), 1.0);
  EXPECT_EQ(p.index_of(30), 2u);
  EXPECT_FALSE(p.index_of(99));
}

TEST(MicroParams, Validation) {
  EXPECT_NO_THROW(params(0, 1).validate());
  EXPECT_THROW(params(-1, 1).validate(), InvalidArgumentError);
  EXPECT_THROW(params(0, 0).validate(), InvalidArgumentError);
  EXPECT_THROW(params(0, 1, 1.0).validate(), InvalidArgumentError);
  auto p = params(0, 1);
  p.horizon_T = 0;
  EXPECT_THROW(p.validate(), InvalidArgumentError);
}

TEST(Probabilities, ReachMatchesDirectFormula) {
  auto pop = RankedPopulation::sequential(20);
  auto mp = params(3.0, 1.2);
  double z = 0;
  for (std::size_t r = 1; r <= 20; ++r) z += std::pow(r + 3.0, -1.2);
  auto reach = reach_probabilities(pop, mp);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_NEAR(reach[i], std::pow(i + 1 + 3.0, -1.2) / z, 1e-15);
    EXPECT_EQ(reach_probability(pop, mp, i), reach[i]);
  }
  EXPECT_NEAR(std::accumulate(reach.begin(), reach.end(), 0.0), 1.0, 1e-14);
  EXPECT_THROW(reach_probability(pop, mp, 20), IndexError);
}

TEST(Probabilities, SelectionRenormalizesOverEligible) {
  auto pop = RankedPopulation::sequential(10);  // qualities 1, 0.9, ..., 0.1
  auto mp = params(1.0, 1.0, 0.55);
  auto elig = eligible_indices(pop, mp);
  EXPECT_EQ(elig, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  auto sel = selection_probabilities(pop, mp);
  double z = 0;
  for (std::size_t r = 1; r <= 5; ++r) z += 1.0 / (r + 1.0);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(sel[i], i < 5 ? 1.0 / (i + 2.0) / z : 0.0, 1e-15);
  auto low = RankedPopulation::make({1, 2}, {1, 2}, {0.3, 0.2});
  EXPECT_THROW(selection_probabilities(low, params(1, 1, 0.5)), EmptyEligibleSetError);
}

TEST(Probabilities, ExpectedDegreesAndHarmonicApprox) {
  auto pop = RankedPopulation::sequential(100);
  auto mp = params(2.0, 1.0);
  mp.lambda_rate = 3;
  mp.horizon_T = 10;
  auto d = expected_degree_profile(pop, mp);
  auto sel = selection_probabilities(pop, mp);
  for (std::size_t i = 0; i < 100; ++i) EXPECT_DOUBLE_EQ(d[i], 30 * sel[i]);
  // Exact normalization vs. ln((N + alpha) / alpha) for large N.
  auto big = RankedPopulation::sequential(100000);
  double z = 0;
  for (std::size_t r = 1; r <= 100000; ++r) z += 1.0 / (r + 50.0);
  EXPECT_NEAR(harmonic_normalization_approx(100000, 50.0) / z, 1.0, 0.01);
  EXPECT_EQ(big.size(), 100000u);
}

TEST(SizeSampler, DistributionsAndValidation) {
  auto f = SizeSampler::fixed(4);
  Rng rng(1);
  EXPECT_EQ(f.sample(rng), 4u);
  EXPECT_THROW(SizeSampler::fixed(1), InvalidArgumentError);
  EXPECT_THROW(SizeSampler::discrete({2, 2}, {1, 1}), InvalidArgumentError);
  EXPECT_THROW(SizeSampler::discrete({2, 3}, {0, 0}), InvalidArgumentError);
  EXPECT_THROW(SizeSampler::discrete({1, 3}, {1, 1}), InvalidArgumentError);

  auto t = SizeSampler::truncated_power_law(2, 5, 2.0);
  auto probs = t.probabilities();
  const double z = 1.0 / 4 + 1.0 / 9 + 1.0 / 16 + 1.0 / 25;
  for (std::size_t k = 2; k <= 5; ++k) EXPECT_NEAR(probs[k - 2], 1.0 / (k * k) / z, 1e-15);

  std::vector<double> freq(4, 0.0);
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) freq[t.sample(rng) - 2] += 1.0 / draws;
  double tv = 0;
  for (std::size_t i = 0; i < 4; ++i) tv += 0.5 * std::abs(freq[i] - probs[i]);
  EXPECT_LT(tv, 0.02);
}

TEST(SampleWithoutReplacement, InclusionMatchesExactProbability) {
  const std::vector<double> w{0.5, 0.25, 0.15, 0.1};
  std::vector<double> cum(w.size());
  std::partial_sum(w.begin(), w.end(), cum.begin());
  // P(i in a 2-sample) = w_i + sum_{j != i} w_j * w_i / (1 - w_j).
  std::vector<double> exact(4);
  for (std::size_t i = 0; i < 4; ++i) {
    exact[i] = w[i];
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) exact[i] += w[j] * w[i] / (1 - w[j]);
  }
  Rng rng(3);
  std::vector<double> freq(4, 0.0);
  const int draws = 40000;
  for (int n = 0; n < draws; ++n) {
    auto s = sample_without_replacement(w, cum, 2, {}, rng);
    ASSERT_EQ(s.size(), 2u);
    ASSERT_NE(s[0], s[1]);
    for (auto i : s) freq[i] += 1.0 / draws;
  }
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(freq[i], exact[i], 0.01) << i;

  auto excl = sample_without_replacement(w, cum, 3, {0}, rng);
  EXPECT_EQ(std::count(excl.begin(), excl.end(), 0u), 0);
  EXPECT_EQ(excl.size(), 3u);
}

TEST(Simulate, RespectsFilterSizesAndTimestamps) {
  auto pop = RankedPopulation::sequential(50);
  auto mp = params(1.0, 1.0, 0.5);
  mp.size_sampler = SizeSampler::truncated_power_law(2, 4, 1.0);
  auto trace = simulate(pop, mp, 500, 9);
  EXPECT_EQ(trace.hypergraph.num_edges(), 500u);
  EXPECT_EQ(trace.hypergraph.num_nodes(), 50u);
  EXPECT_EQ(trace.eligible_set.size(), 25u);
  for (std::size_t t = 0; t < 500; ++t) {
    const auto& e = trace.hypergraph.edge(t);
    EXPECT_EQ(e.timestamp, t);
    EXPECT_GE(e.size(), 2u);
    EXPECT_LE(e.size(), 4u);
    for (auto v : e.nodes) EXPECT_LT(v, 25u) << "filtered node joined an edge";
  }
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(trace.final_degrees[i], trace.hypergraph.degree(pop.node(i)));
}

TEST(Simulate, DeterministicForSeed) {
  auto pop = RankedPopulation::sequential(40);
  auto mp = params(2.0, 1.0);
  EXPECT_EQ(simulate(pop, mp, 300, 4).hypergraph, simulate(pop, mp, 300, 4).hypergraph);
  EXPECT_NE(simulate(pop, mp, 300, 4).hypergraph, simulate(pop, mp, 300, 5).hypergraph);
}

TEST(Simulate, EdgeSizeCannotExceedEligibleSet) {
  auto pop = RankedPopulation::sequential(10);
  auto mp = params(1.0, 1.0, 0.85);  // qualities 1.0 and 0.9 pass
  mp.size_sampler = SizeSampler::fixed(3);
  EXPECT_THROW(simulate(pop, mp, 10, 1), InvalidArgumentError);
}

TEST(ZipfVerification, RecoversExponentOnModerateRun) {
  auto pop = RankedPopulation::sequential(500);
  auto mp = params(5.0, 1.0);
  mp.size_sampler = SizeSampler::fixed(3);
  auto trace = simulate(pop, mp, 10000, 42);
  auto v = verify_zipf_mandelbrot(trace, mp);
  ASSERT_TRUE(v.fit);
  EXPECT_NEAR(v.fit->slope, -1.0, 0.1);
  EXPECT_EQ(v.total_selections, 30000u);
  EXPECT_LT(v.mean_relative_deviation, 0.2);

  auto small = simulate(pop, mp, 100, 1);
  EXPECT_THROW(verify_zipf_mandelbrot(small, mp), InsufficientDataError);
}

TEST(ZipfVerification, SidecarCsv) {
  auto pop = RankedPopulation::sequential(5);
  auto trace = simulate(pop, params(1, 1), 10, 2);
  auto csv = trace_sidecar_csv(trace);
  auto lines = text::split(csv, '\n');
  EXPECT_EQ(lines[0], "node,rank,quality,final_degree");
  EXPECT_EQ(lines.size(), 7u);  // header, five rows, trailing empty
}
