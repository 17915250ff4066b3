#include "pir/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "pir/error.hpp"

namespace pir {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 776;
constexpr double kTop = 44;
constexpr double kBottom = 404;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
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

}  // namespace

std::string render_trajectory_svg(const TrajectorySeries& series) {
    if (series.points.empty()) fail(Code::NoData, "no data");
    const auto& pts = series.points;
    const std::size_t n = pts.size();

    double vmin = pts[0].value;
    double vmax = pts[0].value;
    for (const TrajectoryPoint& p : pts) {
        vmin = std::min(vmin, p.value);
        vmax = std::max(vmax, p.value);
    }
    double pad = vmin == vmax ? 1.0 : 0.05 * (vmax - vmin);
    double lo = vmin - pad;
    double hi = vmax + pad;

    auto x_at = [&](std::size_t i) {
        if (n == 1) return (kLeft + kRight) / 2;
        return kLeft + (kRight - kLeft) * static_cast<double>(i) /
                           static_cast<double>(n - 1);
    };
    auto y_at = [&](double v) {
        return kBottom - (kBottom - kTop) * (v - lo) / (hi - lo);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"480\" "
           "viewBox=\"0 0 800 480\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"480\" fill=\"#ffffff\"/>\n";

    std::string title = escape(series.player) + " " +
                        std::string(kind_name(series.kind)) + " (" +
                        std::string(scope_name(series.scope)) + ", " +
                        std::string(phase_name(series.phase)) + ")";
    svg += "<text x=\"" + num(kWidth / 2) +
           "\" y=\"26\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"15\" fill=\"#111111\">" + title + "</text>\n";

    // horizontal grid and y tick labels
    for (int t = 0; t <= 4; ++t) {
        double v = lo + (hi - lo) * t / 4.0;
        double y = y_at(v);
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kRight) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\" "
               "fill=\"#333333\">" + tick_label(v) + "</text>\n";
    }

    // x ticks: thin out long series
    std::size_t stride = (n + 15) / 16;
    if (stride == 0) stride = 1;
    for (std::size_t i = 0; i < n; i += stride) {
        double x = x_at(i);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(kBottom + 5) +
               "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 18) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"10\" "
               "fill=\"#333333\" transform=\"rotate(-40 " + num(x) + " " +
               num(kBottom + 18) + ")\">" + escape(pts[i].season) + "</text>\n";
    }

    // axes
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(kBottom) +
           "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
           num(kRight) + "\" y2=\"" + num(kBottom) +
           "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

    // axis labels
    svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" +
           num(kHeight - 10) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\" "
           "fill=\"#111111\">season</text>\n";
    svg += "<text x=\"18\" y=\"" + num((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\" "
           "fill=\"#111111\" transform=\"rotate(-90 18 " +
           num((kTop + kBottom) / 2) + ")\">index value</text>\n";

    // data line
    svg += "<polyline fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) svg += " ";
        svg += num(x_at(i)) + "," + num(y_at(pts[i].value));
    }
    svg += "\"/>\n";

    // markers: kept filled, excluded open
    for (std::size_t i = 0; i < n; ++i) {
        double x = x_at(i);
        double y = y_at(pts[i].value);
        if (pts[i].excluded) {
            svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
                   "\" r=\"4\" fill=\"#ffffff\" stroke=\"#d73a49\" "
                   "stroke-width=\"2\"/>\n";
        } else {
            svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
                   "\" r=\"3.5\" fill=\"#1f6feb\"/>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace pir
