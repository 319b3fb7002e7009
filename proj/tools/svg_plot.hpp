#pragma once

// Minimal self-contained SVG line/scatter plots for the CLI reports.

#include <optional>
#include <string>
#include <vector>

namespace pzlab::plot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool markers = false;  // circles at each point instead of a polyline
  bool dashed = false;
};

struct TopAxisTick {
  double x;  // data coordinate on the bottom axis
  std::string label;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::string top_label;  // empty: no top axis
  std::vector<TopAxisTick> top_ticks;
  bool equal_aspect = false;
};

/// Renders the plot; `timestamp` becomes a leading comment when present and is
/// the only content that varies between identical runs.
std::string render_svg(const PlotSpec& spec, const std::optional<std::string>& timestamp);

/// Roughly n round tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int n = 6);

}  // namespace pzlab::plot
