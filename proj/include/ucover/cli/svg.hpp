#pragma once

#include <string>

#include <json.hpp>

namespace ucover::cli {

struct SvgOptions {
    double size = 512.0;
    double stroke = 1.5;
};

/// SVG for a cover JSON document: one boundary path with native elliptical
/// arc commands, y flipped to screen coordinates, and the area as text.
/// Throws GeometryError for malformed covers.
std::string render_svg(const nlohmann::json& cover, const SvgOptions& opt = {});

}  // namespace ucover::cli
