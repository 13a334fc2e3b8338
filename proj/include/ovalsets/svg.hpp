#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ovalsets/general_curve.hpp"
#include "ovalsets/oval.hpp"
#include "ovalsets/vec2.hpp"

namespace ovalsets {

/// One drawable set: a closed polyline with cusp markers, or a single point.
struct SvgLayer {
    std::string name;
    std::vector<Vec2> polyline;
    std::vector<Vec2> cusps;
    std::optional<Vec2> point;
};

/// Layers for an oval; set names are m, wigner, cwms, sms. Throws GeometryError on unknown names.
std::vector<SvgLayer> oval_layers(const OvalSpec& o, const std::vector<std::string>& sets, std::size_t samples);

/// Layers for a parametric curve; set names are m and sms.
std::vector<SvgLayer> parametric_layers(const ParametricCurve& c, const std::vector<std::string>& sets,
                                        std::size_t samples);

/// Standalone SVG document, y axis pointing up, viewBox fitted with a 5% margin.
std::string render_svg(const std::vector<SvgLayer>& layers);

}  // namespace ovalsets
