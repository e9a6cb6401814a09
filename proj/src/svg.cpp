#include "logdens/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logdens/io.hpp"

namespace logdens {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape_xml(const std::string& s) {
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

}  // namespace

void write_line_plot_svg(const std::filesystem::path& path, std::span<const PlotSeries> series,
                         const PlotOptions& options) {
    const double margin_l = 70.0, margin_r = 20.0, margin_t = 40.0, margin_b = 55.0;
    const double plot_w = options.width - margin_l - margin_r;
    const double plot_h = options.height - margin_t - margin_b;

    auto xval = [&](double x) { return options.log_x ? std::log10(x) : x; };

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool have = false;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(y) || (options.log_x && !(x > 0.0)) || !std::isfinite(x)) continue;
            const double xv = xval(x);
            if (!have) {
                xmin = xmax = xv;
                ymin = ymax = y;
                have = true;
            } else {
                xmin = std::min(xmin, xv);
                xmax = std::max(xmax, xv);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (!have) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return margin_l + (xval(x) - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return margin_t + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << options.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape_xml(options.title)
        << "</text>\n";

    // axes box and ticks
    out << "<rect x=\"" << margin_l << "\" y=\"" << margin_t << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
    const int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double fx = xmin + (xmax - xmin) * t / ticks;
        const double gx = margin_l + plot_w * t / ticks;
        const double label = options.log_x ? std::pow(10.0, fx) : fx;
        out << "<line x1=\"" << gx << "\" y1=\"" << margin_t + plot_h << "\" x2=\"" << gx
            << "\" y2=\"" << margin_t + plot_h + 5 << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << gx << "\" y=\"" << margin_t + plot_h + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_g12(label) << "</text>\n";
        const double fy = ymin + (ymax - ymin) * t / ticks;
        const double gy = py(fy);
        out << "<line x1=\"" << margin_l - 5 << "\" y1=\"" << gy << "\" x2=\"" << margin_l
            << "\" y2=\"" << gy << "\" stroke=\"#444\"/>\n";
        out << "<text x=\"" << margin_l - 8 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_g12(fy) << "</text>\n";
    }
    out << "<text x=\"" << margin_l + plot_w / 2 << "\" y=\"" << options.height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape_xml(options.xlabel) << "</text>\n";
    out << "<text x=\"16\" y=\"" << margin_t + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << margin_t + plot_h / 2 << ")\">"
        << escape_xml(options.ylabel) << "</text>\n";

    std::size_t color = 0;
    double legend_y = margin_t + 14.0;
    for (const PlotSeries& s : series) {
        const char* stroke = kPalette[color % (sizeof kPalette / sizeof kPalette[0])];
        ++color;
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(y) || (options.log_x && !(x > 0.0)) || !std::isfinite(x)) continue;
            out << format_g12(px(x)) << ',' << format_g12(py(y)) << ' ';
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<line x1=\"" << margin_l + plot_w - 150 << "\" y1=\"" << legend_y
                << "\" x2=\"" << margin_l + plot_w - 130 << "\" y2=\"" << legend_y
                << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
            out << "<text x=\"" << margin_l + plot_w - 124 << "\" y=\"" << legend_y + 4
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape_xml(s.label)
                << "</text>\n";
            legend_y += 16.0;
        }
    }
    out << "</svg>\n";
    atomic_write(path, out.str());
}

}  // namespace logdens
