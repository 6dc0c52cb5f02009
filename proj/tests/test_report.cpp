#include <gtest/gtest.h>

#include <filesystem>

#include "hypergen/microdynamics.hpp"
#include "hypergen/patterns.hpp"
#include "hypergen/report.hpp"
#include "hypergen/text.hpp"
#include "oracles.hpp"

using namespace hypergen;

namespace {

TemporalHypergraph zipf_graph(std::uint64_t seed, std::size_t edges = 3000) {
  MicroParams p;
  p.alpha = 2;
  p.exponent_gamma = 1.0;
  p.size_sampler = SizeSampler::truncated_power_law(2, 6, 2.0);
  return simulate(RankedPopulation::sequential(300), p, edges, seed).hypergraph;
}

}  // namespace

TEST(PatternReport, GeneratedOnlyHasEightEntriesNoScores) {
  auto h = zipf_graph(1);
  auto r = pattern_report(nullptr, h);
  ASSERT_EQ(r.entries.size(), 8u);
  EXPECT_FALSE(r.has_reference);
  EXPECT_FALSE(r.average_fit_gamma);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(r.entries[i].id, kAllPatterns[i]);
    EXPECT_TRUE(r.entries[i].generated.computed) << pattern_slug(r.entries[i].id);
    EXPECT_FALSE(r.entries[i].fit_gamma);
    EXPECT_FALSE(r.entries[i].distance);
  }
  EXPECT_TRUE(r.entry(PatternId::kDegree).generated.fit);
  EXPECT_TRUE(r.entry(PatternId::kTemporalLocality).generated.scalar);
  EXPECT_EQ(r.entry(PatternId::kDiminishingOverlaps).generated.series.size(), 10u);
}

TEST(PatternReport, SelfComparisonScoresOne) {
  auto h = zipf_graph(2);
  auto r = pattern_report(&h, h);
  EXPECT_TRUE(r.has_reference);
  for (const auto& e : r.entries) {
    if (e.fit_gamma) {
      EXPECT_EQ(*e.fit_gamma, 1.0) << pattern_slug(e.id);
    }
    if (e.distance) {
      EXPECT_EQ(*e.distance, 0.0) << pattern_slug(e.id);
    }
  }
  for (auto id : {PatternId::kDegree, PatternId::kHyperedgeSize, PatternId::kIntersectionSize,
                  PatternId::kSingularValues, PatternId::kGroupDegree, PatternId::kPersistence})
    EXPECT_TRUE(r.entry(id).fit_gamma) << pattern_slug(id);
  EXPECT_TRUE(r.entry(PatternId::kTemporalLocality).distance);
  EXPECT_TRUE(r.entry(PatternId::kDiminishingOverlaps).distance);
  ASSERT_TRUE(r.average_fit_gamma);
  EXPECT_EQ(*r.average_fit_gamma, 1.0);
}

TEST(PatternReport, GammaMatchesHandComputation) {
  auto a = zipf_graph(3), b = zipf_graph(4, 1500);
  auto r = pattern_report(&a, b);
  const auto& e = r.entry(PatternId::kDegree);
  const double real = e.reference->fit->slope, gen = e.generated.fit->slope;
  EXPECT_DOUBLE_EQ(*e.fit_gamma, 1.0 - std::abs(real - gen) / std::abs(real));
  double sum = 0;
  int n = 0;
  for (const auto& x : r.entries)
    if (x.fit_gamma) sum += *x.fit_gamma, ++n;
  EXPECT_DOUBLE_EQ(*r.average_fit_gamma, sum / n);

  const auto da = doi_at_fractions(a, 10), db = doi_at_fractions(b, 10);
  double dist = 0;
  for (std::size_t i = 0; i < 10; ++i) dist += std::abs(da[i] - db[i]);
  EXPECT_DOUBLE_EQ(*r.entry(PatternId::kDiminishingOverlaps).distance, dist / 10);
  EXPECT_DOUBLE_EQ(*r.entry(PatternId::kTemporalLocality).distance,
                   std::abs(temporal_locality(a).mean - temporal_locality(b).mean));
}

TEST(PatternReport, StaticReferenceSkipsDynamicPatterns) {
  auto h = zipf_graph(5);
  auto s = h;
  s.set_temporal(false);
  auto r = pattern_report(&s, h);
  for (const auto& e : r.entries) {
    if (is_dynamic_pattern(e.id)) {
      EXPECT_FALSE(e.reference->computed) << pattern_slug(e.id);
      EXPECT_FALSE(e.fit_gamma || e.distance);
      EXPECT_FALSE(e.comparison_note.empty());
    } else {
      EXPECT_TRUE(e.fit_gamma) << pattern_slug(e.id);
    }
  }
}

TEST(PatternReport, EmptyGraphIsSkippedNotThrown) {
  TemporalHypergraph empty;
  auto r = pattern_report(nullptr, empty);
  ASSERT_EQ(r.entries.size(), 8u);
  for (const auto& e : r.entries) {
    EXPECT_FALSE(e.generated.computed);
    EXPECT_FALSE(e.generated.skip_reason.empty());
  }
}

TEST(PatternReport, SummaryAndCsvs) {
  auto h = zipf_graph(6, 800);
  auto r = pattern_report(&h, h);
  auto summary = report_summary(r);
  EXPECT_NE(summary.find("patterns=8\n"), std::string::npos);
  EXPECT_NE(summary.find("reference=yes\n"), std::string::npos);
  EXPECT_NE(summary.find("p1_degree.gamma=1\n"), std::string::npos);
  EXPECT_NE(summary.find("avg_gamma=1\n"), std::string::npos);

  auto csv = pattern_csv(PatternId::kDegree, r.entry(PatternId::kDegree).generated);
  EXPECT_TRUE(csv.starts_with("value,count\n"));
  const auto degrees = degree_distribution(h);
  std::uint64_t total = 0;
  for (const auto& b : degrees.histogram.bins()) total += b.count;
  std::uint64_t rows = 0;
  for (auto line : text::split(csv, '\n')) {
    if (line.empty() || line.starts_with("value")) continue;
    rows += *text::parse_uint(text::split(line, ',')[1]);
  }
  EXPECT_EQ(rows, total);
  EXPECT_TRUE(pattern_csv(PatternId::kSingularValues, r.entry(PatternId::kSingularValues).generated)
                  .starts_with("rank,singular_value\n"));
  EXPECT_TRUE(pattern_csv(PatternId::kDiminishingOverlaps, r.entry(PatternId::kDiminishingOverlaps).generated)
                  .starts_with("t,doi\n"));

  const std::string dir = std::string(HYPERGEN_TEST_TMP) + "/report_csvs";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  write_report_csvs(r, dir);
  for (auto id : kAllPatterns) {
    EXPECT_TRUE(std::filesystem::exists(dir + "/" + std::string(pattern_slug(id)) + ".csv"));
    EXPECT_TRUE(std::filesystem::exists(dir + "/reference_" + std::string(pattern_slug(id)) + ".csv"));
  }
}

TEST(PatternReport, Deterministic) {
  auto h = zipf_graph(7, 1000);
  EXPECT_EQ(report_summary(pattern_report(&h, zipf_graph(8, 1000))),
            report_summary(pattern_report(&h, zipf_graph(8, 1000))));
}
