#pragma once

// Smooth cut: the chain uv is the curve c0(t), t in [-a, a], whose unit
// tangent at t is (cos t, -sin t) and whose speed is
//   g(t) = b0 + b1 cos t + b2 cos 2t.
// The coefficients are fixed by three conditions: unit length, tangency with
// the unit segments at the ends (x0(a) = cos a) and zero radius of curvature
// at both ends (g(+-a) = 0). The top of the curve sits at the origin.

#include <string>
#include <utility>

#include "ucover/error.hpp"
#include "ucover/involute.hpp"
#include "ucover/numerics/minimize.hpp"
#include "ucover/numerics/real.hpp"

namespace ucover::smooth {

using numerics::Real;

template <Real T>
struct SmoothCoefficients {
    T a;
    T b0;
    T b1;
    T b2;
    T b;  // h(a), half the curve length
};

template <Real T>
struct CurvePoint {
    T x;
    T y;
};

template <Real T>
SmoothCoefficients<T> solve_coefficients(const T& a) {
    using std::abs;
    using std::cos;
    using std::sin;
    if (!(a > T(0) && a < numerics::real_pi<T>() / T(2))) throw DomainError("smooth cut: a must lie in (0, pi/2)");
    const T s1 = sin(a);
    const T c1 = cos(a);
    const T s2 = sin(T(2) * a);
    const T c2 = cos(T(2) * a);
    const T num = T(15) * s2 - T(6) * a * (T(2) * c2 + T(3));
    const T t1 = T(12) * a * a * c2;
    const T t2 = T(2) * a * s2 * (T(7) - c2);
    const T t3 = (T(1) - c2) * (T(11) - T(5) * c2);
    const T den = t1 - t2 + t3;
    const T scale = abs(t1) + abs(t2) + abs(t3);
    const T tiny = T(64) * numerics::real_epsilon<T>() * scale;
    if (!(abs(den) > tiny)) throw DomainError("smooth cut: singular coefficient system at this a");
    const T b1_den = T(2) * (s1 - a * c1);
    if (!(abs(b1_den) > T(64) * numerics::real_epsilon<T>())) {
        throw DomainError("smooth cut: singular coefficient system at this a");
    }
    SmoothCoefficients<T> co{a, T(0), T(0), num / den, T(0)};
    co.b1 = (T(1) - co.b2 * (s2 - T(2) * a * c2)) / b1_den;
    co.b0 = -co.b1 * c1 - co.b2 * c2;
    co.b = co.b0 * a + co.b1 * s1 + co.b2 * s2 / T(2);
    return co;
}

template <Real T>
T speed(const SmoothCoefficients<T>& co, const T& t) {
    using std::cos;
    return co.b0 + co.b1 * cos(t) + co.b2 * cos(T(2) * t);
}

/// Antiderivative of the speed with h(0) = 0.
template <Real T>
T arc_primitive(const SmoothCoefficients<T>& co, const T& t) {
    using std::sin;
    return co.b0 * t + co.b1 * sin(t) + co.b2 * sin(T(2) * t) / T(2);
}

/// String length unwrapped from u by parameter t: h(t) + h(a).
template <Real T>
T unwrapped_length(const SmoothCoefficients<T>& co, const T& t) {
    return arc_primitive(co, t) + co.b;
}

namespace detail {
template <Real T>
void check_param(const SmoothCoefficients<T>& co, const T& t) {
    if (t < -co.a || t > co.a) throw DomainError("smooth cut: parameter t outside [-a, a]");
}
}  // namespace detail

template <Real T>
CurvePoint<T> curve_point(const SmoothCoefficients<T>& co, const T& t) {
    using std::cos;
    using std::sin;
    detail::check_param(co, t);
    const T x = (T(6) * co.b1 * t + T(6) * (T(2) * co.b0 + co.b2) * sin(t) + T(3) * co.b1 * sin(T(2) * t) +
                 T(2) * co.b2 * sin(T(3) * t)) /
                T(12);
    const T y = (T(6) * (T(2) * co.b0 - co.b2) * cos(t) + T(3) * co.b1 * cos(T(2) * t) + T(2) * co.b2 * cos(T(3) * t) -
                 T(12) * co.b0 - T(3) * co.b1 + T(4) * co.b2) /
                T(12);
    return {x, y};
}

/// Points on the left involute (from u to w) and the right involute (from w
/// to v) at parameter t.
template <Real T>
std::pair<CurvePoint<T>, CurvePoint<T>> involute_points(const SmoothCoefficients<T>& co, const T& t) {
    using std::cos;
    using std::sin;
    const CurvePoint<T> c0 = curve_point(co, t);
    const T len = unwrapped_length(co, t);
    const T ct = cos(t);
    const T st = sin(t);
    CurvePoint<T> c1{c0.x - ct * len, c0.y + st * len};
    CurvePoint<T> c2{c1.x + ct, c1.y - st};
    return {c1, c2};
}

/// Indefinite integral of the squared unwrapped length.
template <Real T>
T ell_squared_primitive(const SmoothCoefficients<T>& co, const T& t) {
    using std::cos;
    using std::sin;
    const T &b0 = co.b0, &b1 = co.b1, &b2 = co.b2, &b = co.b;
    return (T(32) * b0 * b0 * t * t * t + T(96) * b0 * b * t * t + T(12) * (T(4) * b1 * b1 + b2 * b2 + T(8) * b * b) * t +
            T(48) * b1 * (T(4) * b0 + b2) * sin(t) + T(24) * (b0 * b2 - b1 * b1) * sin(T(2) * t) -
            T(16) * b1 * b2 * sin(T(3) * t) - T(3) * b2 * b2 * sin(T(4) * t) -
            T(48) * (b0 * t + b) * (T(4) * b1 * cos(t) + b2 * cos(T(2) * t))) /
           T(96);
}

/// Integral of the squared unwrapped length over [-a, a].
template <Real T>
T ell_squared_integral(const SmoothCoefficients<T>& co) {
    using std::cos;
    using std::sin;
    const T &a = co.a, &b0 = co.b0, &b1 = co.b1, &b2 = co.b2, &b = co.b;
    return (T(32) * b0 * b0 * a * a * a + T(12) * (T(4) * b1 * b1 + b2 * b2 + T(8) * b * b) * a +
            T(48) * b1 * (T(4) * b0 + b2) * sin(a) + T(24) * (b0 * b2 - b1 * b1) * sin(T(2) * a) -
            T(16) * b1 * b2 * sin(T(3) * a) - T(3) * b2 * b2 * sin(T(4) * a) -
            T(48) * b0 * a * (T(4) * b1 * cos(a) + b2 * cos(T(2) * a))) /
           T(48);
}

/// 288 * (-2) * integral of x0 y0' dt, normalized to vanish at t = 0.
template <Real T>
T cap_primitive_288(const SmoothCoefficients<T>& co, const T& t) {
    using std::cos;
    using std::sin;
    const T &b0 = co.b0, &b1 = co.b1, &b2 = co.b2;
    return T(12) * (T(24) * b0 * b0 - T(4) * b2 * b2 + T(3) * b1 * b1) * t + T(24) * b1 * (T(21) * b0 - T(2) * b2) * sin(t) -
           T(12) * (T(12) * b0 * b0 - T(8) * b0 * b2 - T(5) * b2 * b2 - T(3) * b1 * b1) * sin(T(2) * t) -
           T(4) * b1 * (T(18) * b0 - b2) * sin(T(3) * t) -
           T(3) * (T(16) * b0 * b2 + T(4) * b2 * b2 + T(3) * b1 * b1) * sin(T(4) * t) - T(12) * b1 * b2 * sin(T(5) * t) -
           T(4) * b2 * b2 * sin(T(6) * t) -
           T(24) * b1 * t * (T(6) * (T(2) * b0 - b2) * cos(t) + T(3) * b1 * cos(T(2) * t) + T(2) * b2 * cos(T(3) * t));
}

/// Area between the curve and its chord uv.
template <Real T>
T cap_area(const SmoothCoefficients<T>& co) {
    return cap_primitive_288(co, co.a) / T(288);
}

template <Real T>
T triangle_area(const SmoothCoefficients<T>& co) {
    using std::cos;
    using std::sin;
    return cos(co.a) * sin(co.a);
}

template <Real T>
T smooth_area(const SmoothCoefficients<T>& co) {
    return ell_squared_integral(co) - triangle_area(co) + cap_area(co);
}

/// g(0) > 0 and g > 0 on `grid` interior points of (-a, a).
bool speed_positive(const SmoothCoefficients<double>& co, int grid = 1000);

inline constexpr double kBracketLo = 0.8;
inline constexpr double kBracketHi = 1.4;

template <Real T>
struct SmoothOptimum {
    T a;
    SmoothCoefficients<T> coefficients;
    T area;
    numerics::MinimizeResult<T> search;
};

template <Real T>
SmoothOptimum<T> optimize_smooth(const T& tol, const T& lo = T(kBracketLo), const T& hi = T(kBracketHi)) {
    auto area = [](const T& a) { return smooth_area(solve_coefficients(a)); };
    auto res = numerics::minimize_1d(area, lo, hi, tol);
    if (!res.converged) throw ConvergenceError("smooth-cut optimization did not reach the tolerance");
    auto co = solve_coefficients(res.x());
    T A = smooth_area(co);
    return {res.x(), co, A, std::move(res)};
}

/// Text report with labeled lines a, b0, b1, b2, A, each truncated to `digits`
/// significant digits. The pipeline runs with guard digits beyond `digits`.
std::string reproduce_appendix(unsigned digits);

/// Chain through the curve at n+1 parameters with equal arc-length spacing,
/// rescaled to total length 1.
involute::GeneratingChain discretize_smooth(const SmoothCoefficients<double>& co, std::size_t n);

}  // namespace ucover::smooth
