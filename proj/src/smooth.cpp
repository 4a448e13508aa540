#include "ucover/smooth.hpp"

#include <cmath>
#include <sstream>

namespace ucover::smooth {

using numerics::BigReal;

bool speed_positive(const SmoothCoefficients<double>& co, int grid) {
    if (!(speed(co, 0.0) > 0)) return false;
    for (int k = 1; k <= grid; ++k) {
        const double t = -co.a + 2.0 * co.a * k / (grid + 1);
        if (!(speed(co, t) > 0)) return false;
    }
    return true;
}

std::string reproduce_appendix(unsigned digits) {
    if (digits < 20) throw DomainError("reproduce_appendix: need at least 20 digits");
    // Locating a minimizer to d digits by function values alone needs about
    // 2d working digits.
    numerics::PrecisionScope scope(2 * digits + 10);
    const auto opt = optimize_smooth<BigReal>(BigReal::pow10(-static_cast<int>(digits) - 5));
    const auto& co = opt.coefficients;
    std::ostringstream os;
    os << "a = " << co.a.str(digits, true) << '\n';
    os << "b0 = " << co.b0.str(digits, true) << '\n';
    os << "b1 = " << co.b1.str(digits, true) << '\n';
    os << "b2 = " << co.b2.str(digits, true) << '\n';
    os << "A = " << opt.area.str(digits, true) << '\n';
    return os.str();
}

namespace {

// Parameter t with h(t) + h(a) = target; the unwrapped length is increasing
// where the speed is positive.
double invert_length(const SmoothCoefficients<double>& co, double target) {
    double lo = -co.a;
    double hi = co.a;
    double t = -co.a + 2.0 * co.a * target / (2.0 * co.b);
    for (int it = 0; it < 100; ++it) {
        const double r = unwrapped_length(co, t) - target;
        if (r > 0) hi = t;
        else lo = t;
        const double g = speed(co, t);
        double next = g > 0 ? t - r / g : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-16 * (1.0 + std::abs(t))) return next;
        t = next;
    }
    return t;
}

}  // namespace

involute::GeneratingChain discretize_smooth(const SmoothCoefficients<double>& co, std::size_t n) {
    if (n < 2) throw DomainError("discretize_smooth: need at least two edges");
    // Left half only; the right half is its mirror image.
    std::vector<double> ts(n / 2 + 1);
    ts[0] = -co.a;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        ts[k] = invert_length(co, 2.0 * co.b * static_cast<double>(k) / static_cast<double>(n));
    }
    if (n % 2 == 0) ts[n / 2] = 0.0;

    std::vector<geometry::Point> pts;
    pts.reserve(n + 1);
    for (std::size_t k = 0; 2 * k <= n; ++k) {
        const auto p = curve_point(co, ts[k]);
        pts.push_back({p.x, p.y});
    }
    for (std::size_t k = n / 2 + 1; k <= n; ++k) pts.push_back(geometry::mirror(pts[n - k]));
    if (n % 2 == 0) pts[n / 2].x = 0.0;

    double len = 0.0;
    for (std::size_t k = 0; k < n; ++k) len += geometry::distance(pts[k], pts[k + 1]);
    for (auto& p : pts) p = (1.0 / len) * p;
    return involute::GeneratingChain(std::move(pts));
}

}  // namespace ucover::smooth
