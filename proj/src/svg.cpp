#include "fpspectral/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fpspectral {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 160;  // room for the legend
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 56;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label, const std::vector<PlotSeries>& series) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  if (!(x_lo <= x_hi)) {  // no finite data at all
    x_lo = 0.0;
    x_hi = 1.0;
    y_lo = 0.0;
    y_hi = 1.0;
  }
  if (x_hi == x_lo) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  if (y_hi == y_lo) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  const double x_pad = 0.05 * (x_hi - x_lo), y_pad = 0.05 * (y_hi - y_lo);
  x_lo -= x_pad;
  x_hi += x_pad;
  y_lo -= y_pad;
  y_hi += y_pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kMarginTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
         "viewBox=\"0 0 720 480\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  svg += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + title + "</text>\n";

  // frame and ticks
  svg += "<rect x=\"" + fmt_coord(kMarginLeft) + "\" y=\"" + fmt_coord(kMarginTop) + "\" width=\"" +
         fmt_coord(plot_w) + "\" height=\"" + fmt_coord(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double xv = x_lo + t * (x_hi - x_lo) / 4.0;
    const double yv = y_lo + t * (y_hi - y_lo) / 4.0;
    svg += "<line x1=\"" + fmt_coord(px(xv)) + "\" y1=\"" + fmt_coord(kMarginTop + plot_h) + "\" x2=\"" +
           fmt_coord(px(xv)) + "\" y2=\"" + fmt_coord(kMarginTop + plot_h + 6) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_coord(px(xv)) + "\" y=\"" + fmt_coord(kMarginTop + plot_h + 22) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(xv) +
           "</text>\n";
    svg += "<line x1=\"" + fmt_coord(kMarginLeft - 6) + "\" y1=\"" + fmt_coord(py(yv)) + "\" x2=\"" +
           fmt_coord(kMarginLeft) + "\" y2=\"" + fmt_coord(py(yv)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_coord(kMarginLeft - 10) + "\" y=\"" + fmt_coord(py(yv) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(yv) + "</text>\n";
  }
  svg += "<text x=\"" + fmt_coord(kMarginLeft + plot_w / 2) + "\" y=\"" + fmt_coord(kHeight - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + x_label +
         "</text>\n";
  svg += "<text x=\"20\" y=\"" + fmt_coord(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 "
         "20 " + fmt_coord(kMarginTop + plot_h / 2) + ")\">" + y_label + "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    int n_pts = 0;
    std::string markers;
    for (std::size_t i = 0; i < series[s].x.size() && i < series[s].y.size(); ++i) {
      if (!std::isfinite(series[s].x[i]) || !std::isfinite(series[s].y[i])) continue;
      const std::string cx = fmt_coord(px(series[s].x[i]));
      const std::string cy = fmt_coord(py(series[s].y[i]));
      points += cx + "," + cy + " ";
      markers += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"3\" fill=\"" + color + "\"/>\n";
      ++n_pts;
    }
    if (n_pts >= 2) {
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" "
             "points=\"" + points + "\"/>\n";
    }
    svg += markers;
    const double ly = kMarginTop + 16.0 * (s + 1);
    svg += "<line x1=\"" + fmt_coord(kWidth - kMarginRight + 12) + "\" y1=\"" + fmt_coord(ly - 4) +
           "\" x2=\"" + fmt_coord(kWidth - kMarginRight + 36) + "\" y2=\"" + fmt_coord(ly - 4) +
           "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + fmt_coord(kWidth - kMarginRight + 42) + "\" y=\"" + fmt_coord(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + series[s].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace fpspectral
