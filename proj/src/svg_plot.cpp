#include "grodep/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace grodep {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22"};
constexpr int kPaletteSize = 9;

constexpr double kWidth = 960, kHeight = 600;
constexpr double kLeft = 70, kRight = 810, kTop = 45, kBottom = 555;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  std::vector<double> ticks;

  double place(double v, double pix_lo, double pix_hi) const {
    double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                   : (v - lo) / (hi - lo);
    return pix_lo + t * (pix_hi - pix_lo);
  }
};

Axis make_axis(double lo, double hi, bool log) {
  Axis ax;
  ax.log = log;
  if (log) {
    ax.lo = std::pow(10.0, std::floor(std::log10(lo)));
    ax.hi = std::pow(10.0, std::ceil(std::log10(hi)));
    if (ax.hi <= ax.lo) ax.hi = ax.lo * 10.0;
    for (double t = ax.lo; t <= ax.hi * 1.0001; t *= 10.0) ax.ticks.push_back(t);
    return ax;
  }
  if (hi <= lo) hi = lo + 1.0;
  const double span = hi - lo;
  // step from {1, 2, 5} x 10^e giving 4..8 ticks
  double step = std::pow(10.0, std::floor(std::log10(span / 4.0)));
  if (span / step > 8.0) step *= 2.0;
  if (span / step > 8.0) step *= 2.5;
  if (span / step > 8.0) step *= 2.0;
  ax.lo = std::floor(lo / step) * step;
  ax.hi = std::ceil(hi / step) * step;
  for (double t = ax.lo; t <= ax.hi + step * 0.5; t += step) {
    ax.ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return ax;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const PlotSeries& s : spec.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!(xmin <= xmax)) {
    xmin = 0.0;
    xmax = 1.0;
    ymin = 0.0;
    ymax = 1.0;
  }
  const Axis ax = make_axis(xmin, xmax, spec.log_x);
  const Axis ay = make_axis(ymin, ymax, spec.log_y);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"600\" "
         "viewBox=\"0 0 960 600\">\n";
  svg += "<rect width=\"960\" height=\"600\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"17\" text-anchor=\"middle\">" + escape(spec.title) + "</text>\n";

  for (double t : ax.ticks) {
    const double px = ax.place(t, kLeft, kRight);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(kBottom + 18) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
           tick_text(t) + "</text>\n";
  }
  for (double t : ay.ticks) {
    const double py = ay.place(t, kBottom, kTop);
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(py) + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
           tick_text(t) + "</text>\n";
  }
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(kRight - kLeft) + "\" height=\"" + num(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" +
         escape(spec.x_label) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num((kTop + kBottom) / 2) +
         "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 " + num((kTop + kBottom) / 2) + ")\">" +
         escape(spec.y_label) + "</text>\n";

  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const PlotSeries& s = spec.series[si];
    const char* color = kPalette[si % kPaletteSize];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      const double x = s.x[i], y = s.y[i];
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (spec.log_x && x <= 0.0) continue;
      if (spec.log_y && y <= 0.0) continue;
      if (!pts.empty()) pts += " ";
      pts += num(ax.place(x, kLeft, kRight)) + "," + num(ay.place(y, kBottom, kTop));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 14 + 20 * static_cast<double>(si);
    svg += "<line x1=\"" + num(kRight + 12) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(kRight + 40) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"1.8\"/>\n";
    svg += "<text x=\"" + num(kRight + 46) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace grodep
