#pragma once

#include <string>
#include <vector>

namespace gof {

// Minimal self-contained SVG line charts for the simulation outputs.
// No external renderer dependencies; everything is inline styling.
struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct SvgChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    // Axis ranges; auto-fit when lo >= hi.
    double x_lo = 0.0, x_hi = 0.0;
    double y_lo = 0.0, y_hi = 0.0;
};

std::string render_svg(const SvgChart& chart, int width = 640, int height = 440);

}  // namespace gof
