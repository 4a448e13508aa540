#include "ucover/geometry/arc_path.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ucover/error.hpp"

namespace ucover::geometry {
namespace {

constexpr double kAngleSlack = 1e-12;

Point arc_point(const ArcSegment& a, double angle) { return a.center + a.radius * unit_at(angle); }

// Fraction along the arc of the direction `angle`, or a negative value when the
// direction is outside the arc.
double arc_fraction(const ArcSegment& a, double angle) {
    const double sweep = a.sweep();
    double delta = a.ccw ? angle - a.a0 : a.a0 - angle;
    delta = std::fmod(delta, kTwoPi);
    if (delta < 0) delta += kTwoPi;
    const double slack = kAngleSlack + (a.radius > 0 ? kAngleSlack / a.radius : 0.0);
    if (delta <= sweep + slack) return sweep > 0 ? std::min(1.0, delta / sweep) : 0.0;
    if (kTwoPi - delta <= slack) return 0.0;
    return -1.0;
}

struct OrientedEdgeTest {
    static double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }
    static bool proper_cross(Point a, Point b, Point c, Point d) {
        const double o1 = orient(a, b, c);
        const double o2 = orient(a, b, d);
        const double o3 = orient(c, d, a);
        const double o4 = orient(c, d, b);
        return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
    }
};

void push_hit(std::vector<PathHit>& hits, Point p, std::size_t piece, double s) {
    hits.push_back({p, piece, std::clamp(s, 0.0, 1.0)});
}

}  // namespace

Point piece_start(const Piece& p) {
    return std::visit(
        [](const auto& q) -> Point {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) return q.a;
            else return arc_point(q, q.a0);
        },
        p);
}

Point piece_end(const Piece& p) {
    return std::visit(
        [](const auto& q) -> Point {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) return q.b;
            else return arc_point(q, q.a1);
        },
        p);
}

double piece_length(const Piece& p) {
    return std::visit(
        [](const auto& q) -> double {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) return distance(q.a, q.b);
            else return q.radius * q.sweep();
        },
        p);
}

Point piece_point(const Piece& p, double s) {
    return std::visit(
        [s](const auto& q) -> Point {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) return q.a + s * (q.b - q.a);
            else return arc_point(q, q.a0 + s * (q.a1 - q.a0));
        },
        p);
}

Point piece_tangent(const Piece& p, double s) {
    return std::visit(
        [s](const auto& q) -> Point {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                const Point d = q.b - q.a;
                return (1.0 / norm(d)) * d;
            } else {
                const double th = q.a0 + s * (q.a1 - q.a0);
                return q.ccw ? Point{-std::sin(th), std::cos(th)} : Point{std::sin(th), -std::cos(th)};
            }
        },
        p);
}

Piece reversed(const Piece& p) {
    return std::visit(
        [](const auto& q) -> Piece {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) return LineSegment{q.b, q.a};
            else return ArcSegment{q.center, q.radius, q.a1, q.a0, !q.ccw};
        },
        p);
}

Piece mirrored(const Piece& p) {
    return std::visit(
        [](const auto& q) -> Piece {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, LineSegment>) return LineSegment{mirror(q.a), mirror(q.b)};
            else return ArcSegment{mirror(q.center), q.radius, kPi - q.a0, kPi - q.a1, !q.ccw};
        },
        p);
}

double piece_distance(const Piece& p, Point q) {
    return std::visit(
        [q](const auto& pc) -> double {
            using T = std::decay_t<decltype(pc)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                const Point d = pc.b - pc.a;
                const double len2 = dot(d, d);
                double t = len2 > 0 ? dot(q - pc.a, d) / len2 : 0.0;
                t = std::clamp(t, 0.0, 1.0);
                return distance(q, pc.a + t * d);
            } else {
                const Point rel = q - pc.center;
                if (norm(rel) > 0 && arc_fraction(pc, angle_of(rel)) >= 0) return std::abs(norm(rel) - pc.radius);
                return std::min(distance(q, arc_point(pc, pc.a0)), distance(q, arc_point(pc, pc.a1)));
            }
        },
        p);
}

bool is_arc(const Piece& p) { return std::holds_alternative<ArcSegment>(p); }

double ArcPath::length() const {
    double total = 0.0;
    for (const auto& p : pieces) total += piece_length(p);
    return total;
}

double ArcPath::max_stitch_gap(bool closed) const {
    double gap = 0.0;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        gap = std::max(gap, distance(piece_end(pieces[i]), piece_start(pieces[i + 1])));
    if (closed && !pieces.empty()) gap = std::max(gap, distance(end(), start()));
    return gap;
}

bool ArcPath::is_closed(double tol) const { return !pieces.empty() && max_stitch_gap(true) <= tol; }

ArcPath ArcPath::reversed() const {
    ArcPath out;
    out.pieces.reserve(pieces.size());
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out.pieces.push_back(geometry::reversed(*it));
    return out;
}

Point ArcPath::point_at(double s) const {
    const double target = std::clamp(s, 0.0, 1.0) * length();
    double acc = 0.0;
    for (const auto& p : pieces) {
        const double len = piece_length(p);
        if (acc + len >= target && len > 0) return piece_point(p, (target - acc) / len);
        acc += len;
    }
    return end();
}

double signed_area_unchecked(const ArcPath& path) {
    double twice = 0.0;
    for (const auto& piece : path.pieces) {
        std::visit(
            [&twice](const auto& q) {
                using T = std::decay_t<decltype(q)>;
                if constexpr (std::is_same_v<T, LineSegment>) {
                    twice += cross(q.a, q.b);
                } else {
                    const double r = q.radius;
                    twice += r * q.center.x * (std::sin(q.a1) - std::sin(q.a0)) -
                             r * q.center.y * (std::cos(q.a1) - std::cos(q.a0)) + r * r * (q.a1 - q.a0);
                }
            },
            piece);
    }
    return 0.5 * twice;
}

double arc_path_area(const ArcPath& path) {
    if (!path.is_closed()) throw GeometryError("arc_path_area: path is not closed");
    if (has_self_intersection(path)) throw GeometryError("arc_path_area: path self-intersects");
    return signed_area_unchecked(path);
}

std::vector<Point> polygonize(const ArcPath& path, double max_angle, int min_chords) {
    std::vector<Point> pts;
    for (const auto& piece : path.pieces) {
        if (const auto* arc = std::get_if<ArcSegment>(&piece)) {
            const int n = std::max(min_chords, static_cast<int>(std::ceil(arc->sweep() / max_angle)));
            for (int i = 0; i < n; ++i) pts.push_back(piece_point(piece, static_cast<double>(i) / n));
        } else {
            pts.push_back(piece_start(piece));
        }
    }
    return pts;
}

bool has_self_intersection(const ArcPath& path) {
    const std::vector<Point> pts = polygonize(path, kPi / 90.0);
    const std::size_t n = pts.size();
    if (n < 4) return false;

    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double extent = std::max(xmax - xmin, ymax - ymin);
    const int cells = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
    const double cell = extent / cells + 1e-300;

    // Uniform grid bucketing of edges by bounding box.
    std::unordered_map<long long, std::vector<std::size_t>> grid;
    auto key = [cells](int ix, int iy) { return static_cast<long long>(ix) * (cells + 7) + iy; };
    auto cell_of = [&](double v, double lo) {
        return std::clamp(static_cast<int>((v - lo) / cell), 0, cells);
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = pts[i];
        const Point b = pts[(i + 1) % n];
        const int x0 = cell_of(std::min(a.x, b.x), xmin), x1 = cell_of(std::max(a.x, b.x), xmin);
        const int y0 = cell_of(std::min(a.y, b.y), ymin), y1 = cell_of(std::max(a.y, b.y), ymin);
        for (int ix = x0; ix <= x1; ++ix)
            for (int iy = y0; iy <= y1; ++iy) grid[key(ix, iy)].push_back(i);
    }
    for (const auto& [k, edges] : grid) {
        for (std::size_t u = 0; u < edges.size(); ++u) {
            for (std::size_t v = u + 1; v < edges.size(); ++v) {
                const std::size_t i = edges[u];
                const std::size_t j = edges[v];
                const std::size_t d = i > j ? i - j : j - i;
                if (d <= 1 || d == n - 1) continue;
                if (OrientedEdgeTest::proper_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return true;
            }
        }
    }
    return false;
}

double total_turning(const ArcPath& path) {
    double turning = 0.0;
    const std::size_t n = path.pieces.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto* arc = std::get_if<ArcSegment>(&path.pieces[i])) turning += arc->signed_sweep();
        const Point out = piece_tangent(path.pieces[i], 1.0);
        const Point in = piece_tangent(path.pieces[(i + 1) % n], 0.0);
        turning += signed_angle(out, in);
    }
    return turning;
}

namespace {

// Intersections of the circle with one piece, appended to `local`.
void piece_circle_hits(const Piece& piece, std::size_t idx, Point center, double r, std::vector<PathHit>& local) {
    if (const auto* seg = std::get_if<LineSegment>(&piece)) {
        const Point d = seg->b - seg->a;
        const Point f = seg->a - center;
        const double A = dot(d, d);
        const double B = 2.0 * dot(f, d);
        const double C = dot(f, f) - r * r;
        if (A == 0) return;
        double disc = B * B - 4 * A * C;
        if (disc < 0) {
            if (disc > -1e-14 * (B * B + std::abs(4 * A * C))) disc = 0;
            else return;
        }
        const double sq = std::sqrt(disc);
        for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
            if (t >= -1e-12 && t <= 1 + 1e-12) push_hit(local, seg->a + std::clamp(t, 0.0, 1.0) * d, idx, t);
        }
    } else {
        const auto& arc = std::get<ArcSegment>(piece);
        const Point delta = arc.center - center;
        const double dd = norm(delta);
        if (dd < 1e-12 && std::abs(arc.radius - r) < 1e-12) {
            push_hit(local, piece_start(piece), idx, 0.0);
            push_hit(local, piece_end(piece), idx, 1.0);
        } else if (dd >= 1e-12) {
            const double R = arc.radius;
            if (dd > r + R + 1e-12 || dd < std::abs(r - R) - 1e-12) return;
            const double along = (r * r - R * R + dd * dd) / (2 * dd);
            const double h2 = r * r - along * along;
            const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
            const Point e = (1.0 / dd) * delta;
            const Point perp{-e.y, e.x};
            for (double sgn : {-1.0, 1.0}) {
                const Point p = center + along * e + (sgn * h) * perp;
                const double s = arc_fraction(arc, angle_of(p - arc.center));
                if (s >= 0) push_hit(local, piece_point(piece, s), idx, s);
                // Near-tangent circles give ill-conditioned angles on
                // small arcs; snap hits that land just past an end.
                else if (distance(p, piece_start(piece)) <= kDedupTol) push_hit(local, piece_start(piece), idx, 0.0);
                else if (distance(p, piece_end(piece)) <= kDedupTol) push_hit(local, piece_end(piece), idx, 1.0);
                if (h == 0) break;
            }
        }
    }
}

}  // namespace

std::vector<PathHit> circle_path_hits(Point center, double r, const ArcPath& path) {
    std::vector<PathHit> raw;
    for (std::size_t idx = 0; idx < path.pieces.size(); ++idx) {
        const Piece& piece = path.pieces[idx];
        std::vector<PathHit> local;
        // Endpoints exactly on the circle are hits regardless of how the
        // intersection formulas round.
        if (std::abs(distance(piece_start(piece), center) - r) <= 1e-12) push_hit(local, piece_start(piece), idx, 0.0);
        if (std::abs(distance(piece_end(piece), center) - r) <= 1e-12) push_hit(local, piece_end(piece), idx, 1.0);
        piece_circle_hits(piece, idx, center, r, local);
        std::sort(local.begin(), local.end(), [](const PathHit& a, const PathHit& b) { return a.s < b.s; });
        raw.insert(raw.end(), local.begin(), local.end());
    }
    std::vector<PathHit> out;
    for (const auto& h : raw) {
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const PathHit& o) { return distance(o.point, h.point) <= kDedupTol; });
        if (!dup) out.push_back(h);
    }
    return out;
}

std::vector<Point> circle_boundary_intersections(Point center, double r, const ArcPath& path) {
    std::vector<Point> out;
    for (const auto& h : circle_path_hits(center, r, path)) out.push_back(h.point);
    return out;
}

}  // namespace ucover::geometry
