#pragma once

#include <cmath>
#include <numbers>

namespace ucover::geometry {

/// Centralized tolerances (unit length = longest rule segment).
inline constexpr double kStitchTol = 1e-9;
inline constexpr double kDedupTol = 1e-9;
inline constexpr double kBoundaryEps = 1e-9;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
    friend Point operator-(Point p) { return {-p.x, -p.y}; }
    friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double angle_of(Point p) { return std::atan2(p.y, p.x); }
inline Point unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }
/// Reflection across the y-axis.
inline Point mirror(Point p) { return {-p.x, p.y}; }

/// Signed angle from a to b in (-pi, pi]; positive is counterclockwise.
inline double signed_angle(Point a, Point b) { return std::atan2(cross(a, b), dot(a, b)); }

}  // namespace ucover::geometry
