#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ucover/geometry/point.hpp"

namespace ucover::geometry {

struct LineSegment {
    Point a;
    Point b;
};

/// Circular arc from angle `a0` to `a1` about `center`. For counterclockwise
/// arcs a1 >= a0, for clockwise arcs a1 <= a0; the sweep never exceeds 2*pi.
struct ArcSegment {
    Point center;
    double radius = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    bool ccw = true;

    double sweep() const { return ccw ? a1 - a0 : a0 - a1; }
    /// Signed angular change (positive counterclockwise).
    double signed_sweep() const { return a1 - a0; }
};

using Piece = std::variant<LineSegment, ArcSegment>;

Point piece_start(const Piece& p);
Point piece_end(const Piece& p);
double piece_length(const Piece& p);
/// Point at fraction s in [0, 1] of the piece parameter (arc length).
Point piece_point(const Piece& p, double s);
/// Unit tangent at fraction s in the direction of traversal.
Point piece_tangent(const Piece& p, double s);
Piece reversed(const Piece& p);
Piece mirrored(const Piece& p);
/// Distance from q to the piece.
double piece_distance(const Piece& p, Point q);
bool is_arc(const Piece& p);

struct ArcPath {
    std::vector<Piece> pieces;

    bool empty() const { return pieces.empty(); }
    std::size_t size() const { return pieces.size(); }
    Point start() const { return piece_start(pieces.front()); }
    Point end() const { return piece_end(pieces.back()); }
    double length() const;
    bool is_closed(double tol = kStitchTol) const;
    /// Largest gap between consecutive piece endpoints (closing gap included
    /// when `closed`).
    double max_stitch_gap(bool closed) const;
    ArcPath reversed() const;
    /// Point at arc-length fraction s in [0, 1] of the whole path.
    Point point_at(double s) const;
};

/// Signed area enclosed by a closed path, exact per piece:
/// 1/2 of the line integral of (x dy - y dx). Counterclockwise is positive.
/// Throws GeometryError for open or self-intersecting paths.
double arc_path_area(const ArcPath& path);

/// The same line integral without the closure/simplicity checks.
double signed_area_unchecked(const ArcPath& path);

/// Closed-path approximation: arcs split into chords of at most `max_angle`
/// radians (and at least `min_chords` chords).
std::vector<Point> polygonize(const ArcPath& path, double max_angle, int min_chords = 1);

/// True iff two non-adjacent polygon edges of the polygonized path cross.
bool has_self_intersection(const ArcPath& path);

/// Total tangent turning of a closed path: arc sweeps plus corner angles.
double total_turning(const ArcPath& path);

/// Intersections of a circle with each piece of the path, deduplicated within
/// kDedupTol and ordered by piece index then by position along the piece.
/// When the circle coincides with an arc piece, the arc endpoints are
/// reported as its representatives.
struct PathHit {
    Point point;
    std::size_t piece = 0;
    /// Fraction along the piece, in [0, 1].
    double s = 0.0;
};
std::vector<PathHit> circle_path_hits(Point center, double r, const ArcPath& path);
std::vector<Point> circle_boundary_intersections(Point center, double r, const ArcPath& path);

}  // namespace ucover::geometry
