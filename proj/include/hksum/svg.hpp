#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hksum/format.hpp"

namespace hksum {

struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

// Self-contained SVG line plot, no external renderer. Good enough for the
// sweep and offset curves; anything fancier belongs in a real plotting tool.
inline void write_svg_plot(std::ostream& os, const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<SvgSeries>& series) {
    constexpr int kW = 720, kH = 480;
    constexpr int kL = 70, kR = 150, kT = 40, kB = 50;
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (!(x_lo < x_hi)) { x_lo -= 0.5; x_hi += 0.5; }
    if (!(y_lo < y_hi)) { y_lo -= 0.5; y_hi += 0.5; }
    const double y_pad = 0.05 * (y_hi - y_lo);
    y_lo -= y_pad;
    y_hi += y_pad;

    const auto px = [&](double x) { return kL + (x - x_lo) / (x_hi - x_lo) * (kW - kL - kR); };
    const auto py = [&](double y) { return kH - kB - (y - y_lo) / (y_hi - y_lo) * (kH - kT - kB); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
       << "</text>\n";

    constexpr int kTicks = 5;
    os << "<g font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
        const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
        os << "<line x1=\"" << px(xv) << "\" y1=\"" << kH - kB << "\" x2=\"" << px(xv) << "\" y2=\""
           << kH - kB + 4 << "\" stroke=\"#333\"/>\n"
           << "<text x=\"" << px(xv) << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\">"
           << format_sig(xv, 4) << "</text>\n"
           << "<line x1=\"" << kL - 4 << "\" y1=\"" << py(yv) << "\" x2=\"" << kL << "\" y2=\""
           << py(yv) << "\" stroke=\"#333\"/>\n"
           << "<text x=\"" << kL - 7 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
           << format_sig(yv, 4) << "</text>\n";
    }
    os << "</g>\n"
       << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR << "\" height=\""
       << kH - kT - kB << "\" fill=\"none\" stroke=\"#333\"/>\n"
       << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 12
       << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n"
       << "<text x=\"16\" y=\"" << (kT + kH - kB) / 2
       << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
       << (kT + kH - kB) / 2 << ")\">" << y_label << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kColors[si % (sizeof kColors / sizeof *kColors)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[si].points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            os << format_sig(px(x), 7) << ',' << format_sig(py(y), 7) << ' ';
        }
        os << "\"/>\n";
        const int ly = kT + 16 + static_cast<int>(si) * 18;
        os << "<line x1=\"" << kW - kR + 10 << "\" y1=\"" << ly << "\" x2=\"" << kW - kR + 34
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n"
           << "<text x=\"" << kW - kR + 40 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
           << series[si].name << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace hksum
