#pragma once

#include <string>
#include <vector>

namespace fpspectral {

// One labelled curve; non-finite samples are dropped point by point.
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// Deterministic static SVG line plot: fixed canvas, fixed palette, markers at
// every sample, connecting polyline only when a series has two or more
// points. Byte-identical output for identical input.
std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label, const std::vector<PlotSeries>& series);

}  // namespace fpspectral
