#include "aesthetica/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "aesthetica/error.hpp"
#include "aesthetica/generators.hpp"

namespace aesthetica::plot {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
    return buf;
}

const char* stroke_color(std::size_t i) {
    static const char* palette[] = {"#000000", "#1f4e9c", "#b22222", "#2e7d32", "#6a1b9a", "#e65100"};
    return palette[i % std::size(palette)];
}

}  // namespace

std::string_view to_string(LineStyle style) noexcept {
    switch (style) {
        case LineStyle::Solid: return "solid";
        case LineStyle::Dotted: return "dotted";
        case LineStyle::Dashed: return "dashed";
        case LineStyle::DashDot: return "dash-dot";
    }
    return "solid";
}

LineStyle style_for(const SampledCurve& curve) {
    if (!curve.meta()) return LineStyle::Solid;
    const auto& m = *curve.meta();
    if (m.family == "log_spiral") return LineStyle::Dotted;
    if (m.family == "log_graph") return LineStyle::Dashed;
    if (m.family == "xlogx_graph") return LineStyle::DashDot;
    if (m.family == "esa") {
        const auto sign = m.param("sign"), xi = m.param("xi");
        if (!sign || !xi || *xi == 0.0 || !std::isfinite(*xi)) return LineStyle::Solid;
        const auto info =
            generators::esa_regime(*sign > 0 ? generators::EsaSign::Plus : generators::EsaSign::Minus, *xi);
        switch (info.regime) {
            case generators::EsaRegime::Oscillatory: return LineStyle::Dotted;
            case generators::EsaRegime::DoubleRoot: return LineStyle::DashDot;
            case generators::EsaRegime::Power: return std::abs(info.omega - 1.5) < 1e-9 ? LineStyle::Dashed : LineStyle::Solid;
        }
    }
    return LineStyle::Solid;
}

std::string render_svg(const std::vector<PlotItem>& items) {
    if (items.empty()) fail(ErrorCode::EmptyInput, "plot: no curves");

    std::vector<std::vector<PlanarPoint>> paths;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& item : items) {
        auto pts = item.curve.points();
        if (item.transform)
            for (auto& p : pts) p = item.transform->apply(p);
        for (const auto& p : pts) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::NonFiniteValue, "plot: non-finite point");
            xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
        }
        paths.push_back(std::move(pts));
    }
    double extent = std::max(xmax - xmin, ymax - ymin);
    if (!(extent > 0.0)) extent = 1.0;
    const double pad = 0.05 * extent;
    const double width = xmax - xmin + 2 * pad, height = ymax - ymin + 2 * pad;
    const double stroke = 0.004 * extent;

    // SVG y points down, so plot (x, -y).
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"" +
           num(std::round(600.0 * height / width)) + "\" viewBox=\"" + num(xmin - pad) + " " + num(-ymax - pad) +
           " " + num(width) + " " + num(height) + "\">\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto style = items[i].style.value_or(style_for(items[i].curve));
        std::string dash;
        switch (style) {
            case LineStyle::Solid: break;
            case LineStyle::Dotted: dash = num(stroke) + "," + num(2 * stroke); break;
            case LineStyle::Dashed: dash = num(6 * stroke) + "," + num(3 * stroke); break;
            case LineStyle::DashDot:
                dash = num(6 * stroke) + "," + num(2 * stroke) + "," + num(stroke) + "," + num(2 * stroke);
                break;
        }
        out += "  <path fill=\"none\" stroke=\"";
        out += stroke_color(i);
        out += "\" stroke-width=\"" + num(stroke) + "\"";
        if (!dash.empty()) out += " stroke-dasharray=\"" + dash + "\"";
        out += " d=\"";
        for (std::size_t j = 0; j < paths[i].size(); ++j) {
            out += j == 0 ? "M" : " L";
            out += num(paths[i][j].x) + "," + num(-paths[i][j].y);
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace aesthetica::plot
