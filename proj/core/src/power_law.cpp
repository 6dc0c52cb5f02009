#include "hypergen/power_law.hpp"

#include <algorithm>
#include <cmath>

#include "hypergen/error.hpp"

namespace hypergen {

DistributionHistogram::DistributionHistogram(const std::map<std::uint64_t, std::uint64_t>& counts) {
  bins_.reserve(counts.size());
  for (const auto& [value, count] : counts) {
    if (count == 0) continue;
    bins_.push_back({value, count});
    total_ += count;
  }
}

DistributionHistogram DistributionHistogram::from_values(std::span<const std::uint64_t> values) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto v : values) ++counts[v];
  return DistributionHistogram(counts);
}

std::vector<LogBin> log_bins(const DistributionHistogram& hist, double ratio) {
  if (!(ratio > 1.0)) throw InvalidArgumentError("log bin ratio must exceed 1");
  std::vector<LogBin> out;
  const auto& bins = hist.bins();
  std::size_t k = 0;
  while (k < bins.size() && bins[k].value == 0) ++k;
  if (k == bins.size()) return out;

  const double total = static_cast<double>(hist.total());
  const std::uint64_t max_value = bins.back().value;
  double lo_edge = 1.0;
  while (k < bins.size()) {
    const double hi_edge = lo_edge * ratio;
    const auto first = static_cast<std::uint64_t>(std::ceil(lo_edge));
    // The last bin stops at the largest observation: integers past the
    // support would otherwise dilute its density.
    const auto last = std::min(static_cast<std::uint64_t>(std::ceil(hi_edge)) - 1, max_value);
    lo_edge = hi_edge;
    if (last < first) continue;  // edge interval holds no integer

    std::uint64_t count = 0;
    while (k < bins.size() && bins[k].value <= last) count += bins[k++].count;
    if (count == 0) continue;
    const double width = static_cast<double>(last - first + 1);
    out.push_back({first, last, count,
                   std::sqrt(static_cast<double>(first) * static_cast<double>(last)),
                   static_cast<double>(count) / (total * width)});
  }
  return out;
}

namespace {

PowerLawFit ordinary_least_squares(std::span<const double> xs, std::span<const double> ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) throw UndefinedMetricError("power-law fit needs at least two distinct x values");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // syy == 0: every point on a horizontal line, which the fit reproduces.
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  fit.num_bins_used = xs.size();
  return fit;
}

}  // namespace

PowerLawFit fit_power_law(const DistributionHistogram& hist) {
  const auto bins = log_bins(hist);
  if (bins.size() < 2)
    throw UndefinedMetricError("power-law fit needs at least two non-empty log bins");
  std::vector<double> xs, ys;
  xs.reserve(bins.size());
  ys.reserve(bins.size());
  for (const auto& b : bins) {
    xs.push_back(std::log10(b.center));
    ys.push_back(std::log10(b.density));
  }
  return ordinary_least_squares(xs, ys);
}

PowerLawFit fit_log_log(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgumentError("fit_log_log: x and y differ in length");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      xs.push_back(std::log10(x[i]));
      ys.push_back(std::log10(y[i]));
    }
  }
  if (xs.size() < 2) throw UndefinedMetricError("log-log fit needs at least two positive points");
  return ordinary_least_squares(xs, ys);
}

double goodness_of_fit_gamma(const PowerLawFit& real, const PowerLawFit& generated) {
  if (real.slope == 0.0) throw InvalidArgumentError("reference slope is zero");
  return 1.0 - std::abs(real.slope - generated.slope) / std::abs(real.slope);
}

}  // namespace hypergen
