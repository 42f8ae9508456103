#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aesthetica/types.hpp"

namespace aesthetica::plot {

/// Line styles of the four graph-like classes: power graph solid, log spiral
/// dotted, log graph dashed, x log x dash-dot.
enum class LineStyle { Solid, Dotted, Dashed, DashDot };

std::string_view to_string(LineStyle style) noexcept;

/// Style implied by the curve's family metadata; Solid when unknown.
LineStyle style_for(const SampledCurve& curve);

struct PlotItem {
    SampledCurve curve;
    std::optional<LineStyle> style;
    /// Applied to every point before plotting.
    std::optional<AffineMap2> transform;
};

/// One <path> per item in an SVG 1.1 document whose viewBox covers all
/// (transformed) points plus a 5% margin. The y axis points up. Throws
/// EmptyInput on an empty list.
std::string render_svg(const std::vector<PlotItem>& items);

}  // namespace aesthetica::plot
