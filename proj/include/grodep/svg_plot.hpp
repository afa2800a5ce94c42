#pragma once

#include <string>
#include <vector>

namespace grodep {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

// Small self-contained line plot, deterministic output: same spec, same
// bytes. Nonpositive values are dropped on log axes.
std::string render_svg(const PlotSpec& spec);

}  // namespace grodep
