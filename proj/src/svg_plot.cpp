#include "gas3km/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace gas3km {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                               "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  if (std::fabs(v) >= 1e5)
    std::snprintf(buf, sizeof buf, "%.2g", v);
  else
    std::snprintf(buf, sizeof buf, "%g", v);
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

// Round `span / target_ticks` up to 1, 2 or 5 times a power of ten.
double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  const double nice = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
  return nice * mag;
}

}  // namespace

std::vector<PlotSeries> afes_series(std::span<const SummaryRow> stats, PlotAxis x_axis) {
  std::set<FunctionId> functions;
  for (const auto& row : stats) functions.insert(row.cell.function);
  const bool multi = functions.size() > 1;

  std::map<std::string, std::map<double, std::pair<double, int>>> acc;
  for (const auto& row : stats) {
    std::string label(algorithm_name(row.cell.algorithm));
    if (multi) label = std::string(function_name(row.cell.function)) + " " + label;
    const double x = static_cast<double>(x_axis == PlotAxis::r ? row.cell.r : row.cell.pop_size);
    auto& slot = acc[label][x];
    slot.first += row.stats.afes;
    slot.second += 1;
  }

  std::vector<PlotSeries> out;
  for (const auto& [label, points] : acc) {
    PlotSeries s{label, {}};
    for (const auto& [x, sum] : points) s.points.emplace_back(x, sum.first / sum.second);
    out.push_back(std::move(s));
  }
  return out;
}

std::string render_svg_plot(std::span<const PlotSeries> series, PlotAxis x_axis,
                            const std::string& title) {
  double x_min = 0.0, x_max = 1.0, y_max = 1.0;
  bool first = true;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (first) {
        x_min = x_max = x;
        first = false;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_max = std::max(y_max, y);
    }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  const double y_step = nice_step(y_max, 5);
  const double y_top = std::ceil(y_max / y_step) * y_step;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) { return kTop + plot_h - y / y_top * plot_h; };

  const char* x_label = x_axis == PlotAxis::r ? "R (selection pressure)" : "N (population size)";
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) +
         "\" height=\"" + fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(kHeight) +
         "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(kHeight) +
         "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         escape(title) + "</text>\n";

  // Axes and ticks.
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" + fixed(kLeft + plot_w) +
         "\" y2=\"" + fixed(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
         fixed(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  std::set<double> xs;
  for (const auto& s : series)
    for (const auto& p : s.points) xs.insert(p.first);
  for (double x : xs)
    svg += "<text x=\"" + fixed(sx(x)) + "\" y=\"" + fixed(kTop + plot_h + 16) + "\" text-anchor=\"middle\">" +
           tick_label(x) + "</text>\n";
  for (double y = 0.0; y <= y_top * (1 + 1e-12); y += y_step)
    svg += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(sy(y) + 4) + "\" text-anchor=\"end\">" +
           tick_label(y) + "</text>\n";
  svg += "</g>\n";
  svg += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" + fixed(kHeight - 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label + "</text>\n";
  svg += "<text x=\"18\" y=\"" + fixed(kTop + plot_h / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " +
         fixed(kTop + plot_h / 2) + ")\">AFES</text>\n";

  // Series.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    if (s.points.size() >= 2) {
      std::string pts;
      for (const auto& [x, y] : s.points) {
        if (!pts.empty()) pts += ' ';
        pts += fixed(sx(x)) + "," + fixed(sy(y));
      }
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"" +
             pts + "\"/>\n";
    }
    for (const auto& [x, y] : s.points)
      svg += "<circle cx=\"" + fixed(sx(x)) + "\" cy=\"" + fixed(sy(y)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
  }

  // Legend.
  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(i);
    const double x = kLeft + plot_w + 16;
    svg += "<line x1=\"" + fixed(x) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(x + 24) + "\" y2=\"" + fixed(y) +
           "\" stroke=\"" + kPalette[i % kPalette.size()] + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fixed(x + 30) + "\" y=\"" + fixed(y + 4) + "\">" + escape(series[i].label) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

void emit_svg_plot(std::span<const SummaryRow> stats, PlotAxis x_axis, const std::filesystem::path& path) {
  const auto series = afes_series(stats, x_axis);
  const std::string svg = render_svg_plot(series, x_axis);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << svg;
  if (!out) throw std::runtime_error("error writing " + path.string());
}

}  // namespace gas3km
