#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "pzlab/report.hpp"

namespace pzlab::plot {
namespace {

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 80, kRight = 180, kTop = 60, kBottom = 60;

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

std::string coord(double v) { return fmt::format("{:.2f}", v); }

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int n) {
  if (!(hi > lo) || n < 2) return {lo};
  const double raw = (hi - lo) / (n - 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step)
    out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  return out;
}

std::string render_svg(const PlotSpec& spec, const std::optional<std::string>& timestamp) {
  Range xr, yr;
  for (const auto& s : spec.series)
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xr.add(s.x[i]);
      yr.add(s.y[i]);
    }
  xr.pad();
  yr.pad();
  double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  if (spec.equal_aspect) {
    const double span = std::max(xr.hi - xr.lo, yr.hi - yr.lo);
    const double cx = 0.5 * (xr.lo + xr.hi), cy = 0.5 * (yr.lo + yr.hi);
    xr.lo = cx - span / 2, xr.hi = cx + span / 2;
    yr.lo = cy - span / 2, yr.hi = cy + span / 2;
    pw = ph = std::min(pw, ph);
  }
  auto X = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto Y = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (timestamp) out += "<!-- generated " + *timestamp + " -->\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
  out += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                     coord(kLeft + pw / 2), escape(spec.title));
  out += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
      coord(kLeft), coord(kTop), coord(pw), coord(ph));

  for (double t : nice_ticks(xr.lo, xr.hi)) {
    const double x = X(t);
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n",
                       coord(x), coord(kTop + ph), coord(kTop + ph + 5));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", coord(x),
                       coord(kTop + ph + 18), format_number(t));
  }
  for (double t : nice_ticks(yr.lo, yr.hi)) {
    const double y = Y(t);
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n",
                       coord(kLeft - 5), coord(y), coord(kLeft));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", coord(kLeft - 8),
                       coord(y + 4), format_number(t));
  }
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                     coord(kLeft + pw / 2), coord(kTop + ph + 42), escape(spec.x_label));
  out += fmt::format(
      "<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0})\">{1}</text>\n",
      coord(kTop + ph / 2), escape(spec.y_label));

  if (!spec.top_label.empty()) {
    for (const auto& tick : spec.top_ticks) {
      if (tick.x < xr.lo || tick.x > xr.hi) continue;
      const double x = X(tick.x);
      out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n",
                         coord(x), coord(kTop - 5), coord(kTop));
      out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", coord(x),
                         coord(kTop - 9), escape(tick.label));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"start\">{}</text>\n",
                       coord(kLeft + pw + 6), coord(kTop - 9), escape(spec.top_label));
  }

  out += fmt::format("<clipPath id=\"plot\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></clipPath>\n",
                     coord(kLeft), coord(kTop), coord(pw), coord(ph));
  out += "<g clip-path=\"url(#plot)\">\n";
  for (const auto& s : spec.series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (s.markers) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
        out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n", coord(X(s.x[i])),
                           coord(Y(s.y[i])), s.color);
      }
      continue;
    }
    std::string pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!pts.empty()) pts += ' ';
      pts += coord(X(s.x[i])) + "," + coord(Y(s.y[i]));
    }
    out += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
                       pts, s.color, s.dashed ? " stroke-dasharray=\"6 4\"" : "");
  }
  out += "</g>\n";

  double ly = kTop + 10;
  for (const auto& s : spec.series) {
    if (s.label.empty()) continue;
    const double lx = kLeft + pw + 12;
    if (s.markers)
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n", coord(lx + 10),
                         coord(ly - 4), s.color);
    else
      out += fmt::format(
          "<line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"{3}\" stroke-width=\"1.5\"{4}/>\n",
          coord(lx), coord(lx + 20), coord(ly - 4), s.color,
          s.dashed ? " stroke-dasharray=\"6 4\"" : "");
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", coord(lx + 26), coord(ly),
                       escape(s.label));
    ly += 18;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pzlab::plot
