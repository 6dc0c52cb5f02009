#include "hypergen/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hypergen/error.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

namespace {

constexpr double kWidth = 480, kHeight = 360;
constexpr double kLeft = 64, kRight = 16, kTop = 32, kBottom = 48;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo, hi;
  bool log;
  std::vector<double> ticks;  // in data units

  double unit(double v) const {  // position in [0, 1]
    const double a = log ? std::log10(v) : v;
    const double l = log ? std::log10(lo) : lo;
    const double h = log ? std::log10(hi) : hi;
    return (a - l) / (h - l);
  }
};

Axis log_axis(double mn, double mx) {
  double lo = std::floor(std::log10(mn)), hi = std::ceil(std::log10(mx));
  if (hi <= lo) {
    lo -= 1;
    hi += 1;
  }
  Axis a{std::pow(10.0, lo), std::pow(10.0, hi), true, {}};
  for (double e = lo; e <= hi; e += 1) a.ticks.push_back(std::pow(10.0, e));
  return a;
}

Axis linear_axis(double mn, double mx) {
  if (mx <= mn) {
    mn -= 1;
    mx += 1;
  }
  const double raw = (mx - mn) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  Axis a{std::floor(mn / step) * step, std::ceil(mx / step) * step, false, {}};
  for (double t = a.lo; t <= a.hi + step * 1e-9; t += step) a.ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return a;
}

std::string tick_label(double v, bool log) {
  if (log) return "1e" + std::to_string(static_cast<int>(std::lround(std::log10(v))));
  return text::format_double(v, 3);
}

}  // namespace

std::string render_plot(const PlotSpec& spec) {
  if (spec.points.empty()) throw InvalidArgumentError("plot needs at least one point");
  const bool log = spec.kind == PlotSpec::Kind::kLogLogScatter;
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& [x, y] : spec.points) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidArgumentError("plot coordinates must be finite");
    if (log && (x <= 0 || y <= 0)) throw InvalidArgumentError("log-log plot needs strictly positive coordinates");
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const Axis ax = log ? log_axis(xmin, xmax) : linear_axis(xmin, xmax);
  const Axis ay = log ? log_axis(ymin, ymax) : linear_axis(ymin, ymax);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + ax.unit(x) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - ay.unit(y)) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) + "\" height=\"" +
       fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + ' ' + fixed(kHeight) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"20.00\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"14\">" + escape(spec.title) + "</text>\n";
  s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(pw) + "\" height=\"" + fixed(ph) + "\"/>\n";
  for (double t : ax.ticks) {
    const double x = px(t);
    s += "<line x1=\"" + fixed(x) + "\" y1=\"" + fixed(kTop + ph) + "\" x2=\"" + fixed(x) + "\" y2=\"" +
         fixed(kTop + ph + 5) + "\"/>\n";
  }
  for (double t : ay.ticks) {
    const double y = py(t);
    s += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" + fixed(y) + "\"/>\n";
  }
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" fill=\"black\">\n";
  for (double t : ax.ticks)
    s += "<text x=\"" + fixed(px(t)) + "\" y=\"" + fixed(kTop + ph + 16) + "\" text-anchor=\"middle\">" +
         tick_label(t, log) + "</text>\n";
  for (double t : ay.ticks)
    s += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(py(t) + 3) + "\" text-anchor=\"end\">" +
         tick_label(t, log) + "</text>\n";
  s += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"" + fixed(kHeight - 8) + "\" text-anchor=\"middle\">" +
       escape(spec.x_label) + "</text>\n";
  s += "<text x=\"14.00\" y=\"" + fixed(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 14.00 " +
       fixed(kTop + ph / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
  s += "</g>\n";

  if (log) {
    s += "<g fill=\"#1f77b4\" stroke=\"none\">\n";
    for (const auto& [x, y] : spec.points)
      s += "<circle cx=\"" + fixed(px(x)) + "\" cy=\"" + fixed(py(y)) + "\" r=\"3.00\"/>\n";
    s += "</g>\n";
    if (spec.fit) {
      // Clip the fitted line to the plotted x-range of the data.
      const double y0 = std::pow(10.0, spec.fit->intercept + spec.fit->slope * std::log10(xmin));
      const double y1 = std::pow(10.0, spec.fit->intercept + spec.fit->slope * std::log10(xmax));
      if (std::isfinite(y0) && std::isfinite(y1) && y0 > 0 && y1 > 0) {
        const double cy0 = std::clamp(py(y0), kTop, kTop + ph), cy1 = std::clamp(py(y1), kTop, kTop + ph);
        s += "<line x1=\"" + fixed(px(xmin)) + "\" y1=\"" + fixed(cy0) + "\" x2=\"" + fixed(px(xmax)) + "\" y2=\"" +
             fixed(cy1) + "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n";
      }
    }
  } else {
    s += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
      if (i) s += ' ';
      s += fixed(px(spec.points[i].first)) + ',' + fixed(py(spec.points[i].second));
    }
    s += "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void emit_plot(const PlotSpec& spec, const std::string& path) { text::write_file(path, render_plot(spec)); }

}  // namespace hypergen
