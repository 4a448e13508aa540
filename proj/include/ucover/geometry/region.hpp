#pragma once

#include <cstddef>
#include <vector>

#include "ucover/geometry/arc_path.hpp"

namespace ucover::geometry {

struct Box {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    bool overlaps(const Box& o, double pad) const {
        return xmin - pad <= o.xmax && o.xmin - pad <= xmax && ymin - pad <= o.ymax && o.ymin - pad <= ymax;
    }
};

Box piece_box(const Piece& p);

/// A closed region bounded by a simple counterclockwise arc path.
class Region {
public:
    /// Validates closure and simplicity; a clockwise boundary is reversed.
    /// Throws GeometryError when the path is open, self-intersecting, or
    /// encloses no area.
    static Region from_boundary(ArcPath boundary);

    const ArcPath& boundary() const { return boundary_; }
    double area() const { return area_; }
    const std::vector<Box>& piece_boxes() const { return boxes_; }
    const Box& bounds() const { return bounds_; }

private:
    Region() = default;
    ArcPath boundary_;
    double area_ = 0.0;
    std::vector<Box> boxes_;
    Box bounds_;
};

enum class Location { inside, outside, boundary };

/// Winding-number classification against the exact pieces; points within eps
/// of the boundary are reported as `boundary`.
Location contains_point(const Region& region, Point p, double eps = kBoundaryEps);

/// True iff the segment pq stays inside the region dilated by eps. Boundary
/// contact counts as contained.
bool segment_inside(const Region& region, Point p, Point q, double eps = kBoundaryEps);

/// Points at arc-length fractions k/n, k = 0..n-1, of a path.
std::vector<Point> boundary_samples(const ArcPath& path, std::size_t n);

/// Max pairwise distance over n arc-length samples of the boundary plus all
/// piece endpoints. Sample sets for n and 2n are nested.
double region_diameter(const Region& region, std::size_t n);

/// Uniform scaling of the region about `about`.
Region scaled(const Region& region, Point about, double factor);

}  // namespace ucover::geometry
