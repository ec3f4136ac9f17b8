#ifndef BGRIP_IO_SVG_HPP
#define BGRIP_IO_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "bgrip/core/energy_1dof.hpp"
#include "bgrip/errors.hpp"
#include "bgrip/explorer/fea_cases.hpp"

// Standalone SVG 1.1 charts. Output is a pure function of the input data:
// fixed canvas, fixed palette, coordinates printed with %.3f.

namespace bgrip {

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartPoint {
  double x = 0.0;
  double y = 0.0;
  std::string label;
};

struct LineChart {
  std::string title;
  std::string x_label; // include the SI unit, e.g. "bend angle (rad)"
  std::string y_label;
  std::vector<LineSeries> series;
  std::vector<ChartPoint> markers;
};

struct BarGroup {
  std::string label;
  std::vector<double> values; // NaN bars are left out
};

struct BarChart {
  std::string title;
  std::string y_label;
  std::vector<std::string> bar_labels;
  std::vector<BarGroup> groups;
};

namespace detail::svg {

inline constexpr double kWidth = 720, kHeight = 460;
inline constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;
inline constexpr const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

inline std::string escape(const std::string &s) {
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

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (!(hi > lo)) {
      const double d = std::abs(lo) > 0 ? 0.5 * std::abs(lo) : 0.5;
      lo -= d;
      hi += d;
    }
  }
};

inline std::string header(const std::string &title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                  num(kWidth) + "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
                  " " + num(kHeight) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
       "\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
       escape(title) + "</text>\n";
  return s;
}

inline std::string axes(const Range &xr, const Range &yr, const std::string &xl,
                        const std::string &yl, bool x_ticks) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  std::string s = "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" +
       num(y0) + "\"/>\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" +
       num(y1) + "\"/>\n</g>\n";
  s += "<g font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    const double py = y0 + f * (y1 - y0);
    s += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" +
         tick(yr.lo + f * (yr.hi - yr.lo)) + "</text>\n";
    if (x_ticks) {
      const double px = x0 + f * (x1 - x0);
      s += "<text x=\"" + num(px) + "\" y=\"" + num(y0 + 16) + "\" text-anchor=\"middle\">" +
           tick(xr.lo + f * (xr.hi - xr.lo)) + "</text>\n";
    }
  }
  s += "</g>\n";
  s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 16) +
       "\" text-anchor=\"middle\" font-size=\"13\">" + escape(xl) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) +
       "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
       num((y0 + y1) / 2) + ")\">" + escape(yl) + "</text>\n";
  return s;
}

} // namespace detail::svg

inline std::string emit_svg(const LineChart &chart) {
  namespace sv = detail::svg;
  std::size_t points = 0;
  for (const auto &ser : chart.series) {
    if (ser.x.size() != ser.y.size())
      throw ContractViolation("series '" + ser.label + "' has mismatched x and y lengths");
    points += ser.x.size();
  }
  if (points == 0)
    throw EmptyData("nothing to plot");
  sv::Range xr, yr;
  for (const auto &ser : chart.series) {
    for (double v : ser.x)
      xr.add(v);
    for (double v : ser.y)
      yr.add(v);
  }
  for (const auto &m : chart.markers) {
    xr.add(m.x);
    yr.add(m.y);
  }
  xr.pad();
  yr.pad();
  const auto px = [&](double x) {
    return sv::kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (sv::kWidth - sv::kLeft - sv::kRight);
  };
  const auto py = [&](double y) {
    return sv::kHeight - sv::kBottom -
           (y - yr.lo) / (yr.hi - yr.lo) * (sv::kHeight - sv::kBottom - sv::kTop);
  };

  std::string s = sv::header(chart.title);
  s += sv::axes(xr, yr, chart.x_label, chart.y_label, true);
  for (std::size_t k = 0; k < chart.series.size(); ++k) {
    const auto &ser = chart.series[k];
    const char *colour = sv::kPalette[k % std::size(sv::kPalette)];
    s += "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
         "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < ser.x.size(); ++i) {
      if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i]))
        continue;
      if (!first)
        s += ' ';
      s += sv::num(px(ser.x[i])) + "," + sv::num(py(ser.y[i]));
      first = false;
    }
    s += "\"/>\n";
    if (!ser.label.empty())
      s += "<text x=\"" + sv::num(sv::kWidth - sv::kRight - 4) + "\" y=\"" +
           sv::num(sv::kTop + 14 + 14 * static_cast<double>(k)) +
           "\" text-anchor=\"end\" font-size=\"11\" fill=\"" + colour + "\">" +
           sv::escape(ser.label) + "</text>\n";
  }
  for (const auto &m : chart.markers) {
    s += "<circle class=\"marker\" cx=\"" + sv::num(px(m.x)) + "\" cy=\"" + sv::num(py(m.y)) +
         "\" r=\"4\" fill=\"black\"/>\n";
    if (!m.label.empty())
      s += "<text x=\"" + sv::num(px(m.x) + 6) + "\" y=\"" + sv::num(py(m.y) - 6) +
           "\" font-size=\"10\">" + sv::escape(m.label) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

inline std::string emit_svg(const BarChart &chart) {
  namespace sv = detail::svg;
  sv::Range yr;
  yr.add(0.0);
  std::size_t bars = 0;
  for (const auto &g : chart.groups)
    for (double v : g.values)
      if (std::isfinite(v)) {
        yr.add(v);
        ++bars;
      }
  if (bars == 0)
    throw EmptyData("nothing to plot");
  yr.pad();
  const double plot_w = sv::kWidth - sv::kLeft - sv::kRight;
  const double plot_h = sv::kHeight - sv::kBottom - sv::kTop;
  const auto py = [&](double y) { return sv::kHeight - sv::kBottom - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::string s = sv::header(chart.title);
  s += sv::axes(yr, yr, "", chart.y_label, false);
  const double group_w = plot_w / static_cast<double>(chart.groups.size());
  const std::size_t per_group = std::max<std::size_t>(1, chart.bar_labels.size());
  const double bar_w = 0.8 * group_w / static_cast<double>(per_group);
  for (std::size_t g = 0; g < chart.groups.size(); ++g) {
    const double gx = sv::kLeft + group_w * static_cast<double>(g);
    s += "<g class=\"group\">\n";
    for (std::size_t b = 0; b < chart.groups[g].values.size(); ++b) {
      const double v = chart.groups[g].values[b];
      if (!std::isfinite(v))
        continue;
      const double top = py(std::max(v, 0.0)), bottom = py(std::min(v, 0.0));
      s += "<rect class=\"bar\" x=\"" + sv::num(gx + 0.1 * group_w + bar_w * static_cast<double>(b)) +
           "\" y=\"" + sv::num(top) + "\" width=\"" + sv::num(bar_w) + "\" height=\"" +
           sv::num(bottom - top) + "\" fill=\"" + sv::kPalette[b % std::size(sv::kPalette)] +
           "\"/>\n";
    }
    s += "</g>\n";
    s += "<text x=\"" + sv::num(gx + group_w / 2) + "\" y=\"" +
         sv::num(sv::kHeight - sv::kBottom + 16) + "\" text-anchor=\"middle\" font-size=\"11\">" +
         sv::escape(chart.groups[g].label) + "</text>\n";
  }
  for (std::size_t b = 0; b < chart.bar_labels.size(); ++b)
    s += "<text x=\"" + sv::num(sv::kWidth - sv::kRight - 4) + "\" y=\"" +
         sv::num(sv::kTop + 14 + 14 * static_cast<double>(b)) +
         "\" text-anchor=\"end\" font-size=\"11\" fill=\"" +
         sv::kPalette[b % std::size(sv::kPalette)] + "\">" + sv::escape(chart.bar_labels[b]) +
         "</text>\n";
  s += "</svg>\n";
  return s;
}

/// Indices of discrete local extrema of y (interior points only).
inline std::vector<std::size_t> local_extrema(const std::vector<double> &y) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    const double a = y[i] - y[i - 1], b = y[i + 1] - y[i];
    if ((a < 0 && b >= 0) || (a > 0 && b <= 0))
      idx.push_back(i);
  }
  return idx;
}

/// Total energy curve with its component terms and a marker at every
/// sampled local extremum.
inline LineChart landscape_chart(const EnergyLandscape &land, bool with_terms = true) {
  LineChart c;
  c.title = "Energy landscape";
  c.x_label = "bend angle (rad)";
  c.y_label = "energy (J)";
  c.series.push_back({"total", land.theta_grid, land.total});
  if (with_terms) {
    c.series.push_back({"finger", land.theta_grid, land.finger});
    c.series.push_back({"ring", land.theta_grid, land.ring});
    if (std::any_of(land.gravity.begin(), land.gravity.end(), [](double g) { return g != 0.0; }))
      c.series.push_back({"gravity", land.theta_grid, land.gravity});
  }
  for (std::size_t i : local_extrema(land.total))
    c.markers.push_back({land.theta_grid[i], land.total[i], ""});
  return c;
}

/// Open, saddle and closed energies of every morphology case, grouped per case.
inline BarChart fea_bar_chart(const FeaCaseReport &rep) {
  BarChart c;
  c.title = "Strain energy per morphology case";
  c.y_label = "energy (J)";
  c.bar_labels = {"open stable", "unstable", "closed stable"};
  for (const auto &fc : rep.cases)
    c.groups.push_back(
        {fc.name, {fc.metrics.open_energy, fc.metrics.saddle_energy, fc.metrics.closed_energy}});
  return c;
}

} // namespace bgrip

#endif // BGRIP_IO_SVG_HPP
