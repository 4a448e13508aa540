#pragma once

#include <json.hpp>

#include "ucover/geometry/region.hpp"

namespace ucover::geometry {

// {"pieces":[{"kind":"arc","cx","cy","r","a0","a1","ccw"} | {"kind":"seg","x0","y0","x1","y1"}], "area":...}
nlohmann::json path_to_json(const ArcPath& path);
ArcPath path_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const Region& region);
/// Rebuilds the region from "pieces"; the stored "area" is not trusted.
Region region_from_json(const nlohmann::json& j);

}  // namespace ucover::geometry
