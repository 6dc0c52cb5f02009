#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypergen {

struct PlotSpec {
  enum class Kind { kLogLogScatter, kLineSeries };

  struct Fit {
    double slope = 0.0;
    double intercept = 0.0;  // log10 units: log10 y = intercept + slope * log10 x
  };

  Kind kind = Kind::kLogLogScatter;
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
  std::optional<Fit> fit;  // log-log only
};

/// Standalone SVG 1.1 document; equal specs give equal bytes. Throws
/// InvalidArgumentError for an empty series, non-finite values, or a
/// non-positive coordinate on log-log axes.
std::string render_plot(const PlotSpec& spec);
void emit_plot(const PlotSpec& spec, const std::string& path);

}  // namespace hypergen
