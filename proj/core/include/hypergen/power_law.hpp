#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypergen/histogram.hpp"

namespace hypergen {

/// Straight-line fit in log-log space. Slopes are base-independent; the
/// intercept is in log10 units.
struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t num_bins_used = 0;
};

/// One logarithmic bin of a histogram, ready for plotting or regression.
struct LogBin {
  std::uint64_t first_value;  // smallest integer covered
  std::uint64_t last_value;   // largest integer covered
  std::uint64_t count;        // observations falling in the bin
  double center;              // geometric mean of first and last value
  double density;             // count / (total * integers covered)
};

inline constexpr double kLogBinRatio = 1.5;

/// Non-empty logarithmic bins with edges at ratio^i, i = 0, 1, ...
/// The last bin ends at the largest observation. Zero-valued observations
/// are not binned.
std::vector<LogBin> log_bins(const DistributionHistogram& hist, double ratio = kLogBinRatio);

/// OLS of log10(density) on log10(center) over the non-empty log bins.
/// Throws UndefinedMetricError with fewer than two bins.
PowerLawFit fit_power_law(const DistributionHistogram& hist);

/// OLS of log10(y) on log10(x) over points with x > 0 and y > 0.
/// Throws UndefinedMetricError with fewer than two usable points or no
/// spread in x.
PowerLawFit fit_log_log(std::span<const double> x, std::span<const double> y);

/// 1 - |slope_real - slope_gen| / |slope_real|, unclamped. Throws
/// InvalidArgumentError when the reference slope is zero.
double goodness_of_fit_gamma(const PowerLawFit& real, const PowerLawFit& generated);

}  // namespace hypergen
