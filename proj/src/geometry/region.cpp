#include "ucover/geometry/region.hpp"

#include <algorithm>
#include <cmath>

#include "ucover/error.hpp"

namespace ucover::geometry {
namespace {

void extend(Box& b, Point p) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
}

// Winding contribution (radians) of a counterclockwise arc with sweep <= pi/2
// between points a and b, seen from p.
double ccw_subarc_winding(Point center, double radius, Point a, Point b, Point p) {
    double w = signed_angle(a - p, b - p);
    if (distance(p, center) < radius && cross(b - a, p - a) < 0 && w < 0) w += kTwoPi;
    return w;
}

double piece_winding(const Piece& piece, Point p) {
    if (const auto* seg = std::get_if<LineSegment>(&piece)) return signed_angle(seg->a - p, seg->b - p);
    const auto& arc = std::get<ArcSegment>(piece);
    const double sweep = arc.sweep();
    const int parts = std::max(1, static_cast<int>(std::ceil(sweep / (kPi / 2))));
    double total = 0.0;
    for (int i = 0; i < parts; ++i) {
        Point a = piece_point(piece, static_cast<double>(i) / parts);
        Point b = piece_point(piece, static_cast<double>(i + 1) / parts);
        if (arc.ccw) total += ccw_subarc_winding(arc.center, arc.radius, a, b, p);
        else total -= ccw_subarc_winding(arc.center, arc.radius, b, a, p);
    }
    return total;
}

// Parameters t in (0, 1) where the segment p + t d meets the piece.
void segment_piece_params(const Piece& piece, Point p, Point d, double eps, std::vector<double>& ts) {
    const double len = norm(d);
    auto add_if_near = [&](Point v) {
        const double t = dot(v - p, d) / (len * len);
        if (t > 0 && t < 1 && distance(p + t * d, v) <= eps) ts.push_back(t);
    };
    if (const auto* seg = std::get_if<LineSegment>(&piece)) {
        const Point e = seg->b - seg->a;
        const double den = cross(d, e);
        const double elen = norm(e);
        add_if_near(seg->a);
        add_if_near(seg->b);
        if (std::abs(den) <= 1e-14 * len * elen) return;  // parallel: endpoints cover overlaps
        const Point w = seg->a - p;
        const double t = cross(w, e) / den;
        const double s = cross(w, d) / den;
        if (t > 0 && t < 1 && s >= -1e-12 && s <= 1 + 1e-12) ts.push_back(t);
        return;
    }
    const auto& arc = std::get<ArcSegment>(piece);
    add_if_near(piece_start(piece));
    add_if_near(piece_end(piece));
    const Point f = p - arc.center;
    const double A = dot(d, d);
    const double B = 2.0 * dot(f, d);
    const double C = dot(f, f) - arc.radius * arc.radius;
    double disc = B * B - 4 * A * C;
    if (disc < 0) {
        // Near-tangency: report the closest approach when it lies within eps.
        const double t = -B / (2 * A);
        const Point c = p + t * d;
        if (t > 0 && t < 1 && std::abs(distance(c, arc.center) - arc.radius) <= eps &&
            piece_distance(piece, c) <= eps)
            ts.push_back(t);
        return;
    }
    const double sq = std::sqrt(disc);
    for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
        if (t > 0 && t < 1 && piece_distance(piece, p + t * d) <= eps) ts.push_back(t);
    }
}

}  // namespace

Box piece_box(const Piece& p) {
    const Point s = piece_start(p);
    Box b{s.x, s.y, s.x, s.y};
    extend(b, piece_end(p));
    if (const auto* arc = std::get_if<ArcSegment>(&p)) {
        const double lo = std::min(arc->a0, arc->a1);
        const double hi = std::max(arc->a0, arc->a1);
        // Axis-extreme directions k*pi/2 within the swept range.
        for (double k = std::ceil(lo / (kPi / 2)); k * (kPi / 2) <= hi; k += 1.0)
            extend(b, arc->center + arc->radius * unit_at(k * (kPi / 2)));
    }
    return b;
}

Region Region::from_boundary(ArcPath boundary) {
    if (boundary.empty()) throw GeometryError("region boundary is empty");
    const double gap = boundary.max_stitch_gap(true);
    if (gap > kStitchTol) {
        throw GeometryError("region boundary is not a closed path (gap " + std::to_string(gap) + ")");
    }
    if (has_self_intersection(boundary)) throw GeometryError("region boundary self-intersects");
    double area = signed_area_unchecked(boundary);
    if (area < 0) {
        boundary = boundary.reversed();
        area = -area;
    }
    if (!(area > 0)) throw GeometryError("region encloses no area");
    Region r;
    r.boundary_ = std::move(boundary);
    r.area_ = area;
    r.boxes_.reserve(r.boundary_.size());
    for (const auto& p : r.boundary_.pieces) r.boxes_.push_back(piece_box(p));
    r.bounds_ = r.boxes_.front();
    for (const auto& b : r.boxes_) {
        extend(r.bounds_, {b.xmin, b.ymin});
        extend(r.bounds_, {b.xmax, b.ymax});
    }
    return r;
}

Location contains_point(const Region& region, Point p, double eps) {
    const auto& pieces = region.boundary().pieces;
    const auto& boxes = region.piece_boxes();
    const Box probe{p.x, p.y, p.x, p.y};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (boxes[i].overlaps(probe, eps) && piece_distance(pieces[i], p) <= eps) return Location::boundary;
    }
    if (!region.bounds().overlaps(probe, 0.0)) return Location::outside;
    double winding = 0.0;
    for (const auto& piece : pieces) winding += piece_winding(piece, p);
    return std::abs(winding) > kPi ? Location::inside : Location::outside;
}

bool segment_inside(const Region& region, Point p, Point q, double eps) {
    const Point d = q - p;
    const double len = norm(d);
    if (len <= eps) return contains_point(region, p, eps) != Location::outside;

    Box seg_box{std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x), std::max(p.y, q.y)};
    std::vector<double> ts{0.0, 1.0};
    const auto& pieces = region.boundary().pieces;
    const auto& boxes = region.piece_boxes();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (boxes[i].overlaps(seg_box, eps)) segment_piece_params(pieces[i], p, d, eps, ts);
    }
    std::sort(ts.begin(), ts.end());
    const double min_gap = eps / len;
    std::vector<double> cuts;
    for (double t : ts) {
        if (cuts.empty() || t - cuts.back() > min_gap) cuts.push_back(t);
    }
    if (cuts.back() < 1.0) cuts.back() = 1.0;

    // Between consecutive boundary contacts the open sub-segment lies wholly on
    // one side of the boundary, so one interior probe decides it.
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        const Location mid = contains_point(region, p + (0.5 * (a + b)) * d, eps);
        if (mid == Location::outside) return false;
        if (mid == Location::boundary) {
            for (double f : {0.25, 0.75}) {
                if (contains_point(region, p + (a + f * (b - a)) * d, eps) == Location::outside) return false;
            }
        }
    }
    return true;
}

std::vector<Point> boundary_samples(const ArcPath& path, std::size_t n) {
    std::vector<double> cum{0.0};
    for (const auto& piece : path.pieces) cum.push_back(cum.back() + piece_length(piece));
    const double total = cum.back();
    std::vector<Point> out;
    out.reserve(n);
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double target = total * static_cast<double>(k) / static_cast<double>(n);
        while (j + 1 < path.pieces.size() && cum[j + 1] < target) ++j;
        const double len = cum[j + 1] - cum[j];
        out.push_back(piece_point(path.pieces[j], len > 0 ? (target - cum[j]) / len : 0.0));
    }
    return out;
}

double region_diameter(const Region& region, std::size_t n) {
    std::vector<Point> pts = boundary_samples(region.boundary(), n);
    for (const auto& piece : region.boundary().pieces) pts.push_back(piece_start(piece));

    // Andrew's monotone chain; the diameter is attained on the hull.
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k > 1 ? k - 1 : k);

    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j) best = std::max(best, distance(hull[i], hull[j]));
    return best;
}

Region scaled(const Region& region, Point about, double factor) {
    ArcPath out;
    for (const auto& piece : region.boundary().pieces) {
        if (const auto* seg = std::get_if<LineSegment>(&piece)) {
            out.pieces.push_back(LineSegment{about + factor * (seg->a - about), about + factor * (seg->b - about)});
        } else {
            auto arc = std::get<ArcSegment>(piece);
            arc.center = about + factor * (arc.center - about);
            arc.radius *= factor;
            out.pieces.push_back(arc);
        }
    }
    return Region::from_boundary(std::move(out));
}

}  // namespace ucover::geometry
