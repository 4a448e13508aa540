#include "ucover/cli/svg.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "ucover/geometry/io.hpp"

namespace ucover::cli {

std::string render_svg(const nlohmann::json& cover, const SvgOptions& opt) {
    const geometry::ArcPath path = geometry::region_from_json(cover).boundary();
    geometry::Box box = geometry::piece_box(path.pieces.front());
    for (const auto& piece : path.pieces) {
        const auto b = geometry::piece_box(piece);
        box.xmin = std::min(box.xmin, b.xmin);
        box.ymin = std::min(box.ymin, b.ymin);
        box.xmax = std::max(box.xmax, b.xmax);
        box.ymax = std::max(box.ymax, b.ymax);
    }
    const double margin = 0.05 * opt.size;
    const double extent = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    const double scale = (opt.size - 2 * margin) / extent;
    auto sx = [&](double x) { return margin + (x - box.xmin) * scale; };
    auto sy = [&](double y) { return margin + (box.ymax - y) * scale; };

    std::ostringstream d;
    d << std::setprecision(10);
    const geometry::Point s = path.start();
    d << "M " << sx(s.x) << ' ' << sy(s.y);
    for (const auto& piece : path.pieces) {
        const geometry::Point e = geometry::piece_end(piece);
        if (const auto* arc = std::get_if<geometry::ArcSegment>(&piece)) {
            const double r = arc->radius * scale;
            // Counterclockwise in the plane is clockwise on screen, which is
            // SVG's positive sweep direction.
            d << " A " << r << ' ' << r << " 0 " << (arc->sweep() > geometry::kPi ? 1 : 0) << ' '
              << (arc->ccw ? 1 : 0) << ' ' << sx(e.x) << ' ' << sy(e.y);
        } else {
            d << " L " << sx(e.x) << ' ' << sy(e.y);
        }
    }
    d << " Z";

    double area = 0.0;
    if (cover.contains("area") && cover.at("area").is_number()) area = cover.at("area").get<double>();
    else area = geometry::arc_path_area(path);

    std::ostringstream os;
    os << std::setprecision(10);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
       << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
    os << "  <path d=\"" << d.str() << "\" fill=\"#dde6f0\" stroke=\"#1a2a3a\" stroke-width=\"" << opt.stroke
       << "\"/>\n";
    os << "  <text x=\"" << margin << "\" y=\"" << opt.size - margin / 3 << "\" font-family=\"sans-serif\" font-size=\""
       << opt.size / 32 << "\">area = " << std::setprecision(10) << area << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace ucover::cli
