#include "ucover/geometry/io.hpp"

#include "ucover/error.hpp"

namespace ucover::geometry {

nlohmann::json path_to_json(const ArcPath& path) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& piece : path.pieces) {
        if (const auto* seg = std::get_if<LineSegment>(&piece)) {
            pieces.push_back({{"kind", "seg"}, {"x0", seg->a.x}, {"y0", seg->a.y}, {"x1", seg->b.x}, {"y1", seg->b.y}});
        } else {
            const auto& arc = std::get<ArcSegment>(piece);
            pieces.push_back({{"kind", "arc"},
                              {"cx", arc.center.x},
                              {"cy", arc.center.y},
                              {"r", arc.radius},
                              {"a0", arc.a0},
                              {"a1", arc.a1},
                              {"ccw", arc.ccw}});
        }
    }
    return pieces;
}

ArcPath path_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw GeometryError("\"pieces\" must be an array");
    ArcPath path;
    try {
        for (const auto& p : j) {
            const std::string kind = p.at("kind").get<std::string>();
            if (kind == "seg") {
                path.pieces.push_back(LineSegment{{p.at("x0").get<double>(), p.at("y0").get<double>()},
                                                  {p.at("x1").get<double>(), p.at("y1").get<double>()}});
            } else if (kind == "arc") {
                ArcSegment arc{{p.at("cx").get<double>(), p.at("cy").get<double>()},
                               p.at("r").get<double>(),
                               p.at("a0").get<double>(),
                               p.at("a1").get<double>(),
                               p.at("ccw").get<bool>()};
                if (!(arc.radius > 0) || arc.sweep() < 0 || arc.sweep() > kTwoPi) {
                    throw GeometryError("invalid arc piece");
                }
                path.pieces.push_back(arc);
            } else {
                throw GeometryError("unknown piece kind '" + kind + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw GeometryError(std::string("malformed piece: ") + e.what());
    }
    return path;
}

nlohmann::json region_to_json(const Region& region) {
    return {{"pieces", path_to_json(region.boundary())}, {"area", region.area()}};
}

Region region_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pieces")) throw GeometryError("cover JSON needs a \"pieces\" array");
    return Region::from_boundary(path_from_json(j.at("pieces")));
}

}  // namespace ucover::geometry
