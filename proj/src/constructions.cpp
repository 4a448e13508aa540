#include "ucover/constructions.hpp"

#include <cmath>

namespace ucover::constructions {
namespace {

using geometry::ArcPath;
using geometry::ArcSegment;
using geometry::kPi;
using geometry::LineSegment;
using geometry::Point;
using geometry::Region;

constexpr double kAngleMin = 1e-4;
constexpr double kAngleMax = 1.2;
constexpr double kSumMargin = 1e-4;
constexpr double kInfeasiblePenalty = 10.0;

// A left-boundary sector: the string end sweeps clockwise about `center`
// starting from direction `start`.
struct Sector {
    Point center;
    double radius;
    double start;
    double sweep;
};

// Boundary: chain u -> v, right sectors upward from v, left sectors downward
// to u. Every arc is traversed counterclockwise.
Region assemble(const std::vector<Point>& chain, const std::vector<Sector>& left) {
    ArcPath path;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) path.pieces.push_back(LineSegment{chain[i], chain[i + 1]});
    for (const auto& s : left) {
        if (s.sweep <= 0) continue;
        const double start = kPi - s.start;
        path.pieces.push_back(ArcSegment{geometry::mirror(s.center), s.radius, start, start + s.sweep, true});
    }
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        if (it->sweep <= 0) continue;
        path.pieces.push_back(ArcSegment{it->center, it->radius, it->start - it->sweep, it->start, true});
    }
    return Region::from_boundary(std::move(path));
}

bool in_box(const std::vector<double>& x) {
    double sum = 0;
    for (double v : x) {
        if (!(v > kAngleMin && v < kAngleMax)) return false;
        sum += v;
    }
    return sum < kPi / 2 - kSumMargin;
}

}  // namespace

Region r2_cover() {
    const Point u{-0.5, 0.0};
    const Point v{0.5, 0.0};
    return assemble({u, v}, {{v, 1.0, kPi, kPi / 3}});
}

Region two_edge_region(const TwoEdgeParams<double>& p) {
    const double depth = 0.5 * std::sin(p.c);
    const Point m{0.0, 0.0};
    const Point u{-p.x0 / 2, -depth};
    const Point v{p.x0 / 2, -depth};
    return assemble({u, m, v}, {{m, 0.5, kPi + p.c, 2 * p.c}, {v, 1.0, kPi - p.c, p.a}});
}

std::pair<ThreeEdgeParams<double>, Region> three_edge_cover(double a, double b) {
    const auto p = solve_three_edge(a, b);
    const Point p1{-p.x2 / 2, 0.0};
    const Point p2{p.x2 / 2, 0.0};
    const Point u = p1 - p.x1 * geometry::unit_at(b);
    const Point v = p2 + p.x1 * Point{std::cos(b), -std::sin(b)};
    Region r = assemble({u, p1, p2, v},
                        {{p1, p.x1, kPi + b, b}, {p2, p.x1 + p.x2, kPi, b}, {v, 1.0, kPi - b, a}});
    return {p, std::move(r)};
}

std::pair<FourEdgeParams<double>, Region> four_edge_cover(double a, double b, double c) {
    const auto p = solve_four_edge(a, b, c);
    const Point p2{0.0, 0.0};
    const Point p1 = p2 - p.x3 * geometry::unit_at(c);
    const Point p3 = p2 + p.x3 * Point{std::cos(c), -std::sin(c)};
    const Point u = p1 - p.x1 * geometry::unit_at(b + c);
    const Point v = p3 + p.x1 * Point{std::cos(b + c), -std::sin(b + c)};
    Region r = assemble({u, p1, p2, p3, v}, {{p1, p.x1, kPi + b + c, b},
                                             {p2, 0.5, kPi + c, 2 * c},
                                             {p3, 1.0 - p.x1, kPi - c, b},
                                             {v, 1.0, kPi - b - c, a}});
    return {p, std::move(r)};
}

ConstructionOptimum optimize_construction(CutKind kind) {
    switch (kind) {
        case CutKind::two: {
            auto area = [](double a) { return two_edge_area(solve_two_edge(a)); };
            auto res = numerics::minimize_1d(area, kAngleMin, kPi / 3 - kSumMargin, 1e-12);
            if (!res.converged) throw ConvergenceError("two-edge optimization did not converge");
            const auto p = solve_two_edge(res.x());
            return {kind, {p.a}, p, two_edge_area(p), two_edge_region(p), std::move(res)};
        }
        case CutKind::three: {
            auto area = [](const std::vector<double>& x) {
                if (!in_box(x)) return kInfeasiblePenalty;
                try {
                    return three_edge_area(solve_three_edge(x[0], x[1]));
                } catch (const InfeasibleError&) {
                    return kInfeasiblePenalty;
                }
            };
            auto res = numerics::minimize_nd(area, std::vector<double>{0.5, 0.5}, 1e-10);
            if (!res.converged) throw ConvergenceError("three-edge optimization did not converge");
            auto [p, region] = three_edge_cover(res.argmin[0], res.argmin[1]);
            return {kind, res.argmin, p, three_edge_area(p), std::move(region), std::move(res)};
        }
        case CutKind::four: {
            auto area = [](const std::vector<double>& x) {
                if (!in_box(x)) return kInfeasiblePenalty;
                try {
                    return four_edge_area(solve_four_edge(x[0], x[1], x[2]));
                } catch (const InfeasibleError&) {
                    return kInfeasiblePenalty;
                }
            };
            auto res = numerics::minimize_nd(area, std::vector<double>{0.5, 0.4, 0.2}, 1e-10);
            if (!res.converged) throw ConvergenceError("four-edge optimization did not converge");
            auto [p, region] = four_edge_cover(res.argmin[0], res.argmin[1], res.argmin[2]);
            return {kind, res.argmin, p, four_edge_area(p), std::move(region), std::move(res)};
        }
    }
    throw DomainError("unknown construction kind");
}

ThreeEdgeFlatOptimum optimize_three_edge_flat() {
    // x1 > 0 forces cos b < 1/2, so b ranges over (pi/3, pi/2).
    auto area = [](double b) { return three_edge_area(solve_three_edge(0.0, b)); };
    auto res = numerics::minimize_1d(area, kPi / 3 + kSumMargin, kPi / 2 - kSumMargin, 1e-12);
    if (!res.converged) throw ConvergenceError("flat three-edge optimization did not converge");
    return {res.x(), res.min_value};
}

}  // namespace ucover::constructions
