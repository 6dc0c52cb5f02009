#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypergen/histogram.hpp"
#include "hypergen/hypergraph.hpp"
#include "hypergen/power_law.hpp"

namespace hypergen {

enum class PatternId {
  kDegree = 1,
  kHyperedgeSize,
  kIntersectionSize,
  kSingularValues,
  kGroupDegree,
  kTemporalLocality,
  kPersistence,
  kDiminishingOverlaps,
};

inline constexpr std::array<PatternId, 8> kAllPatterns = {
    PatternId::kDegree,           PatternId::kHyperedgeSize,   PatternId::kIntersectionSize,
    PatternId::kSingularValues,   PatternId::kGroupDegree,     PatternId::kTemporalLocality,
    PatternId::kPersistence,      PatternId::kDiminishingOverlaps};

// File-name friendly identifier, e.g. "p1_degree".
std::string_view pattern_slug(PatternId id);
std::string_view pattern_title(PatternId id);
// Whether the pattern needs meaningful edge order / timestamps.
bool is_dynamic_pattern(PatternId id);

struct ReportConfig {
  std::size_t group_size = 2;
  std::size_t spectrum_k = 50;
  std::size_t locality_window = 10;
  std::size_t doi_checkpoints = 10;
};

/// One pattern measured on one hypergraph.
struct PatternStats {
  bool computed = false;
  std::string skip_reason;
  std::optional<DistributionHistogram> histogram;  // P1 P2 P3 P5 P7
  std::vector<std::pair<double, double>> series;   // P4 (rank, sigma), P6 (t, fraction), P8 (t, DoI)
  std::optional<double> scalar;                    // P6 mean locality, P8 final DoI
  std::optional<PowerLawFit> fit;                  // P1 P2 P3 P4 P5 P7
  std::string fit_note;                            // why `fit` is absent
};

struct PatternEntry {
  PatternId id{};
  PatternStats generated;
  std::optional<PatternStats> reference;
  std::optional<double> fit_gamma;  // slope comparison (P1-P5, P7)
  std::optional<double> distance;   // P6: |mean difference|; P8: mean |DoI difference|
  std::string comparison_note;      // why neither score is present
};

struct PatternReport {
  bool has_reference = false;
  std::vector<PatternEntry> entries;  // always the eight patterns, in order
  std::optional<double> average_fit_gamma;

  const PatternEntry& entry(PatternId id) const;
};

/// Measures every pattern on `generated` and, when `reference` is given,
/// scores the generated graph against it. Failures become skipped entries.
PatternReport pattern_report(const TemporalHypergraph* reference, const TemporalHypergraph& generated,
                             const ReportConfig& config = {});

/// DoI at `count` relative checkpoints i/count of m (i = 1..count).
std::vector<double> doi_at_fractions(const TemporalHypergraph& h, std::size_t count);

// Rows of the per-pattern CSV for one measured hypergraph ("value,count",
// "rank,singular_value", "t,fraction" or "t,doi" with a header line).
std::string pattern_csv(PatternId id, const PatternStats& stats);

/// Writes `<dir>/<slug>.csv` (and `<dir>/reference_<slug>.csv`) for every
/// computed pattern.
void write_report_csvs(const PatternReport& report, const std::string& dir);

/// key=value lines: per-pattern status, slope, r2, gamma, distance; the
/// average gamma last.
std::string report_summary(const PatternReport& report);

}  // namespace hypergen
