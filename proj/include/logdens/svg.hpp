#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace logdens {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool log_x = false;
    int width = 840;
    int height = 520;
};

/// Static SVG line plot; writes atomically.
void write_line_plot_svg(const std::filesystem::path& path, std::span<const PlotSeries> series,
                         const PlotOptions& options);

}  // namespace logdens
