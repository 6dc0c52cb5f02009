#include "hypergen/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "hypergen/error.hpp"
#include "hypergen/patterns.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

std::string_view pattern_slug(PatternId id) {
  switch (id) {
    case PatternId::kDegree: return "p1_degree";
    case PatternId::kHyperedgeSize: return "p2_hyperedge_size";
    case PatternId::kIntersectionSize: return "p3_intersection_size";
    case PatternId::kSingularValues: return "p4_singular_values";
    case PatternId::kGroupDegree: return "p5_group_degree";
    case PatternId::kTemporalLocality: return "p6_temporal_locality";
    case PatternId::kPersistence: return "p7_persistence";
    case PatternId::kDiminishingOverlaps: return "p8_diminishing_overlaps";
  }
  return "unknown";
}

std::string_view pattern_title(PatternId id) {
  switch (id) {
    case PatternId::kDegree: return "Degrees";
    case PatternId::kHyperedgeSize: return "Hyperedge sizes";
    case PatternId::kIntersectionSize: return "Intersection sizes";
    case PatternId::kSingularValues: return "Singular values";
    case PatternId::kGroupDegree: return "Group degree";
    case PatternId::kTemporalLocality: return "Temporal locality";
    case PatternId::kPersistence: return "Power-law persistence";
    case PatternId::kDiminishingOverlaps: return "Intersecting pairs";
  }
  return "unknown";
}

bool is_dynamic_pattern(PatternId id) {
  return id == PatternId::kTemporalLocality || id == PatternId::kPersistence ||
         id == PatternId::kDiminishingOverlaps;
}

const PatternEntry& PatternReport::entry(PatternId id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw InvalidArgumentError("pattern not in report");
}

std::vector<double> doi_at_fractions(const TemporalHypergraph& h, std::size_t count) {
  const auto m = h.num_edges();
  if (m < 2) throw UndefinedMetricError("DoI needs at least two edges");
  std::vector<std::size_t> wanted;
  for (std::size_t i = 1; i <= count; ++i) {
    auto c = static_cast<std::size_t>(static_cast<double>(m) * static_cast<double>(i) /
                                          static_cast<double>(count) + 0.5);
    wanted.push_back(std::clamp<std::size_t>(c, 2, m));
  }
  std::vector<std::size_t> unique = wanted;
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const auto series = density_of_interactions_series(h, unique);
  std::vector<double> out;
  out.reserve(count);
  std::size_t k = 0;
  for (auto c : wanted) {
    while (series[k].t != c) ++k;
    out.push_back(series[k].doi);
  }
  return out;
}

namespace {

void fit_histogram(PatternStats& s) {
  try {
    s.fit = fit_power_law(*s.histogram);
  } catch (const Error& e) {
    s.fit_note = e.what();
  }
}

PatternStats measure(PatternId id, const TemporalHypergraph& h, const ReportConfig& cfg) {
  PatternStats s;
  if (h.empty()) {
    s.skip_reason = "hypergraph has no edges";
    return s;
  }
  if (is_dynamic_pattern(id) && !h.is_temporal()) {
    s.skip_reason = "hypergraph has no timestamps";
    return s;
  }
  try {
    switch (id) {
      case PatternId::kDegree:
        s.histogram = degree_distribution(h).histogram;
        fit_histogram(s);
        break;
      case PatternId::kHyperedgeSize:
        s.histogram = hyperedge_size_distribution(h);
        fit_histogram(s);
        break;
      case PatternId::kIntersectionSize:
        s.histogram = intersection_size_distribution(h);
        fit_histogram(s);
        break;
      case PatternId::kGroupDegree:
        s.histogram = group_degree_distribution(h, cfg.group_size);
        fit_histogram(s);
        break;
      case PatternId::kSingularValues: {
        const auto sv = singular_value_spectrum(h, cfg.spectrum_k);
        std::vector<double> ranks, values;
        for (std::size_t i = 0; i < sv.size(); ++i) {
          s.series.emplace_back(static_cast<double>(i + 1), sv[i]);
          ranks.push_back(static_cast<double>(i + 1));
          values.push_back(sv[i]);
        }
        try {
          s.fit = fit_log_log(ranks, values);
        } catch (const Error& e) {
          s.fit_note = e.what();
        }
        break;
      }
      case PatternId::kTemporalLocality: {
        const auto loc = temporal_locality(h, cfg.locality_window);
        for (std::size_t i = 0; i < loc.per_edge.size(); ++i)
          s.series.emplace_back(static_cast<double>(i + 1), loc.per_edge[i]);
        s.scalar = loc.mean;
        break;
      }
      case PatternId::kPersistence: {
        auto p = persistence_interevent_distribution(h);
        s.histogram = std::move(p.gaps);
        s.fit = p.fit;
        if (!s.fit) s.fit_note = "fewer than two non-empty log bins";
        break;
      }
      case PatternId::kDiminishingOverlaps: {
        const auto cps = evenly_spaced_checkpoints(h.num_edges(), cfg.doi_checkpoints);
        for (const auto& pt : density_of_interactions_series(h, cps))
          s.series.emplace_back(static_cast<double>(pt.t), pt.doi);
        s.scalar = s.series.back().second;
        break;
      }
    }
    s.computed = true;
  } catch (const Error& e) {
    s = PatternStats{};
    s.skip_reason = e.what();
  }
  return s;
}

void compare(PatternEntry& entry, const TemporalHypergraph& real, const TemporalHypergraph& gen,
             const ReportConfig& cfg) {
  const auto& r = *entry.reference;
  const auto& g = entry.generated;
  if (!r.computed || !g.computed) {
    entry.comparison_note = !r.computed ? "reference: " + r.skip_reason : "generated: " + g.skip_reason;
    return;
  }
  try {
    switch (entry.id) {
      case PatternId::kTemporalLocality:
        entry.distance = std::abs(*r.scalar - *g.scalar);
        break;
      case PatternId::kDiminishingOverlaps: {
        const auto a = doi_at_fractions(real, cfg.doi_checkpoints);
        const auto b = doi_at_fractions(gen, cfg.doi_checkpoints);
        double sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
        entry.distance = sum / static_cast<double>(a.size());
        break;
      }
      default:
        if (!r.fit || !g.fit) {
          entry.comparison_note = !r.fit ? "reference fit undefined" : "generated fit undefined";
          return;
        }
        entry.fit_gamma = goodness_of_fit_gamma(*r.fit, *g.fit);
        break;
    }
  } catch (const Error& e) {
    entry.comparison_note = e.what();
  }
}

}  // namespace

PatternReport pattern_report(const TemporalHypergraph* reference, const TemporalHypergraph& generated,
                             const ReportConfig& config) {
  PatternReport report;
  report.has_reference = reference != nullptr;
  double gamma_sum = 0.0;
  std::size_t gamma_count = 0;
  for (auto id : kAllPatterns) {
    PatternEntry entry;
    entry.id = id;
    entry.generated = measure(id, generated, config);
    if (reference) {
      entry.reference = measure(id, *reference, config);
      compare(entry, *reference, generated, config);
      if (entry.fit_gamma) {
        gamma_sum += *entry.fit_gamma;
        ++gamma_count;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  if (gamma_count > 0) report.average_fit_gamma = gamma_sum / static_cast<double>(gamma_count);
  return report;
}

std::string pattern_csv(PatternId id, const PatternStats& stats) {
  std::string out;
  if (stats.histogram) {
    out = "value,count\n";
    for (const auto& b : stats.histogram->bins())
      out += std::to_string(b.value) + ',' + std::to_string(b.count) + '\n';
    return out;
  }
  switch (id) {
    case PatternId::kSingularValues: out = "rank,singular_value\n"; break;
    case PatternId::kTemporalLocality: out = "t,fraction\n"; break;
    default: out = "t,doi\n"; break;
  }
  for (const auto& [x, y] : stats.series)
    out += text::format_double(x) + ',' + text::format_double(y) + '\n';
  return out;
}

void write_report_csvs(const PatternReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : report.entries) {
    const std::string slug(pattern_slug(e.id));
    if (e.generated.computed)
      text::write_file(dir + "/" + slug + ".csv", pattern_csv(e.id, e.generated));
    if (e.reference && e.reference->computed)
      text::write_file(dir + "/reference_" + slug + ".csv", pattern_csv(e.id, *e.reference));
  }
}

std::string report_summary(const PatternReport& report) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) { out += key + '=' + value + '\n'; };
  line("patterns", std::to_string(report.entries.size()));
  line("reference", report.has_reference ? "yes" : "no");
  for (const auto& e : report.entries) {
    const std::string p(pattern_slug(e.id));
    line(p + ".status", e.generated.computed ? "ok" : "skipped");
    if (!e.generated.computed) line(p + ".reason", e.generated.skip_reason);
    if (e.generated.fit) {
      line(p + ".slope", text::format_double(e.generated.fit->slope));
      line(p + ".r2", text::format_double(e.generated.fit->r_squared));
    }
    if (e.generated.scalar) line(p + ".value", text::format_double(*e.generated.scalar));
    if (e.reference && e.reference->fit) line(p + ".reference_slope", text::format_double(e.reference->fit->slope));
    if (e.reference && e.reference->scalar) line(p + ".reference_value", text::format_double(*e.reference->scalar));
    if (e.fit_gamma) line(p + ".gamma", text::format_double(*e.fit_gamma));
    if (e.distance) line(p + ".distance", text::format_double(*e.distance));
    if (report.has_reference && !e.fit_gamma && !e.distance && !e.comparison_note.empty())
      line(p + ".comparison", e.comparison_note);
  }
  if (report.average_fit_gamma) line("avg_gamma", text::format_double(*report.average_fit_gamma));
  return out;
}

}  // namespace hypergen
