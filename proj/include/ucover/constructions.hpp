#pragma once

// Closed-form covers: R2 and the two-, three- and four-edge cuts.
//
// Frame: the y-axis is the symmetry axis, the cut (at the bottom) has its
// highest point on y = 0, u is on the left, v on the right, and the apex w is
// on the positive y-axis. Each cover is assembled directly from its circular
// sectors; the generic involute construction reproduces the same shapes by a
// separate route.

#include <utility>
#include <variant>
#include <vector>

#include "ucover/error.hpp"
#include "ucover/geometry/region.hpp"
#include "ucover/numerics/minimize.hpp"
#include "ucover/numerics/real.hpp"

namespace ucover::constructions {

using numerics::Real;

template <Real T>
struct TwoEdgeParams {
    T a;   // large-sector angle
    T c;   // half-angle of the small sectors
    T x0;  // base length |uv|
};

template <Real T>
struct ThreeEdgeParams {
    T a;
    T b;
    T x0;  // |uv|
    T x1;  // slanted edges
    T x2;  // top edge
};

template <Real T>
struct FourEdgeParams {
    T a;
    T b;
    T c;
    T x0;  // |uv|
    T x1;  // outer edges
    T x2;  // chord of the inner edges
    T x3;  // inner edges
};

template <Real T>
T r2_area() {
    using std::sqrt;
    return numerics::real_pi<T>() / T(3) - sqrt(T(3)) / T(4);
}

/// Solves 2 cos(a + c) = cos c for c in (0, pi/2 - a) by bisection.
template <Real T>
TwoEdgeParams<T> solve_two_edge(const T& a) {
    using std::cos;
    const T half_pi = numerics::real_pi<T>() / T(2);
    if (!(a > T(0) && a < half_pi)) throw InfeasibleError("two-edge cut: angle a must lie in (0, pi/2)");
    auto residual = [&](const T& c) { return T(2) * cos(a + c) - cos(c); };
    T lo(0);
    T hi = half_pi - a;
    T rlo = residual(lo);
    T rhi = residual(hi);
    if (!(rlo > T(0) && rhi < T(0))) throw InfeasibleError("two-edge cut: no root for c (need a < pi/3)");
    for (int i = 0; i < 200; ++i) {
        T mid = (lo + hi) / T(2);
        T rm = residual(mid);
        if (rm > T(0)) lo = mid;
        else hi = mid;
    }
    T c = (lo + hi) / T(2);
    return {a, c, cos(c)};
}

template <Real T>
T two_edge_area(const TwoEdgeParams<T>& p) {
    using std::sin;
    return p.a + p.c / T(2) - sin(T(2) * p.a + T(2) * p.c) / T(2) + sin(T(2) * p.c) / T(8);
}

/// Area at the stationary point a = 2c, where it reduces to a function of a alone.
template <Real T>
T two_edge_area_at_stationary(const T& a) {
    using std::sin;
    return T(5) * a / T(4) - sin(T(3) * a) / T(2) + sin(a) / T(8);
}

template <Real T>
ThreeEdgeParams<T> solve_three_edge(const T& a, const T& b) {
    using std::cos;
    const T half_pi = numerics::real_pi<T>() / T(2);
    if (!(a >= T(0) && b > T(0) && a + b < half_pi)) {
        throw InfeasibleError("three-edge cut: need a >= 0, b > 0, a + b < pi/2");
    }
    ThreeEdgeParams<T> p{a, b, T(2) * cos(a + b), T(0), T(0)};
    p.x1 = (T(1) - p.x0) / (T(2) * (T(1) - cos(b)));
    p.x2 = T(1) - T(2) * p.x1;
    if (!(p.x1 > T(0) && p.x1 < T(0.5))) throw InfeasibleError("three-edge cut: slanted edge length outside (0, 1/2)");
    return p;
}

template <Real T>
T three_edge_area(const ThreeEdgeParams<T>& p) {
    using std::sin;
    const T one_minus = T(1) - p.x1;
    return p.b * (p.x1 * p.x1 + one_minus * one_minus) + p.a - p.x0 / T(2) * sin(p.a + p.b) +
           (p.x0 + p.x2) / T(2) * p.x1 * sin(p.b);
}

template <Real T>
FourEdgeParams<T> solve_four_edge(const T& a, const T& b, const T& c) {
    using std::cos;
    const T half_pi = numerics::real_pi<T>() / T(2);
    if (!(a > T(0) && b > T(0) && c > T(0) && a + b + c < half_pi)) {
        throw InfeasibleError("four-edge cut: need a, b, c > 0 and a + b + c < pi/2");
    }
    FourEdgeParams<T> p{a, b, c, T(2) * cos(a + b + c), T(0), T(0), T(0)};
    p.x1 = (cos(c) - p.x0) / (T(2) * cos(c) - T(2) * cos(b + c));
    p.x2 = (T(1) - T(2) * p.x1) * cos(c);
    p.x3 = T(0.5) - p.x1;
    if (!(p.x1 > T(0) && p.x1 < T(0.5))) throw InfeasibleError("four-edge cut: outer edge length outside (0, 1/2)");
    return p;
}

template <Real T>
T four_edge_area(const FourEdgeParams<T>& p) {
    using std::sin;
    const T one_minus = T(1) - p.x1;
    return p.b * (p.x1 * p.x1 + one_minus * one_minus) + p.c / T(2) + p.a -
           p.x0 / T(2) * sin(p.a + p.b + p.c) + (p.x0 + p.x2) / T(2) * p.x1 * sin(p.b + p.c) +
           p.x2 / T(2) * p.x3 * sin(p.c);
}

/// The convex cover: unit arcs uw (center v) and vw (center u) over the base uv,
/// with u = (-1/2, 0), v = (1/2, 0), w = (0, sqrt(3)/2).
geometry::Region r2_cover();

geometry::Region two_edge_region(const TwoEdgeParams<double>& p);

std::pair<ThreeEdgeParams<double>, geometry::Region> three_edge_cover(double a, double b);
std::pair<FourEdgeParams<double>, geometry::Region> four_edge_cover(double a, double b, double c);

enum class CutKind { two, three, four };

struct ConstructionOptimum {
    CutKind kind;
    /// Free angles: {a} for two, {a, b} for three, {a, b, c} for four.
    std::vector<double> angles;
    std::variant<TwoEdgeParams<double>, ThreeEdgeParams<double>, FourEdgeParams<double>> params;
    double area;
    geometry::Region region;
    numerics::MinimizeResult<double> search;
};

/// Minimizes the closed-form area over the feasible angle box.
ConstructionOptimum optimize_construction(CutKind kind);

/// Three-edge cut restricted to a = 0, optimized over b.
struct ThreeEdgeFlatOptimum {
    double b;
    double area;
};
ThreeEdgeFlatOptimum optimize_three_edge_flat();

}  // namespace ucover::constructions
