#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gas3km/harness.hpp"

namespace gas3km {

enum class PlotAxis { r, pop_size };

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, afes), ascending x
};

/// Groups summary rows into one series per algorithm (per function/algorithm
/// pair when several functions are present). Cells sharing a series and an x
/// value are averaged.
std::vector<PlotSeries> afes_series(std::span<const SummaryRow> stats, PlotAxis x_axis);

/// Standalone SVG 1.1 document: one polyline per series with two or more
/// points, a circle marker for single-point series, axes, labels and legend.
/// Output depends only on the input.
std::string render_svg_plot(std::span<const PlotSeries> series, PlotAxis x_axis,
                            const std::string& title = "AFES");

/// Throws std::runtime_error when the file cannot be written.
void emit_svg_plot(std::span<const SummaryRow> stats, PlotAxis x_axis,
                   const std::filesystem::path& path);

}  // namespace gas3km
