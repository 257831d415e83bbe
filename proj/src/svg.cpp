#include "gof/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gof {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Round axis bounds outward to a tick-friendly step.
std::pair<double, double> nice_range(double lo, double hi) {
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double span = hi - lo;
    const double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
    return {std::floor(lo / step) * step, std::ceil(hi / step) * step};
}

}  // namespace

std::string render_svg(const SvgChart& chart, int width, int height) {
    const double ml = 62, mr = 16, mt = 34, mb = 46;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    double x_lo = chart.x_lo, x_hi = chart.x_hi, y_lo = chart.y_lo, y_hi = chart.y_hi;
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        double ax = std::numeric_limits<double>::infinity(), bx = -ax;
        double ay = ax, by = -ax;
        for (const auto& s : chart.series) {
            for (const auto& [x, y] : s.points) {
                ax = std::min(ax, x);
                bx = std::max(bx, x);
                ay = std::min(ay, y);
                by = std::max(by, y);
            }
        }
        if (!(x_lo < x_hi)) std::tie(x_lo, x_hi) = nice_range(ax, bx);
        if (!(y_lo < y_hi)) std::tie(y_lo, y_hi) = nice_range(ay, by);
    }

    auto px = [&](double x) { return ml + pw * (x - x_lo) / (x_hi - x_lo); };
    auto py = [&](double y) { return mt + ph * (1.0 - (y - y_lo) / (y_hi - y_lo)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"14\">" << chart.title << "</text>\n";

    // Axes with 6 ticks per side.
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / 5.0;
        const double yv = y_lo + (y_hi - y_lo) * i / 5.0;
        out << "<line x1=\"" << fmt(px(xv)) << "\" y1=\"" << mt << "\" x2=\"" << fmt(px(xv))
            << "\" y2=\"" << mt + ph << "\" stroke=\"#ddd\"/>\n";
        out << "<line x1=\"" << ml << "\" y1=\"" << fmt(py(yv)) << "\" x2=\"" << ml + pw
            << "\" y2=\"" << fmt(py(yv)) << "\" stroke=\"#ddd\"/>\n";
        out << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << mt + ph + 16
            << "\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << fmt(py(yv) + 4)
            << "\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
    }
    out << "</g>\n";
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << fmt(pw) << "\" height=\""
        << fmt(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << chart.x_label
        << "</text>\n";
    out << "<text x=\"14\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 "
        << mt + ph / 2 << ")\">" << chart.y_label << "</text>\n";

    for (std::size_t s = 0; s < chart.series.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : chart.series[s].points) {
            out << fmt(px(std::clamp(x, x_lo, x_hi))) << "," << fmt(py(std::clamp(y, y_lo, y_hi))) << " ";
        }
        out << "\"/>\n";
        const double ly = mt + 14 + 15.0 * static_cast<double>(s);
        out << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
            << ml + pw - 132 << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + pw - 128 << "\" y=\"" << fmt(ly)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << chart.series[s].label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gof
