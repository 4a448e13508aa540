#pragma once

// Derivative-free minimizers.
//
// minimize_1d: golden-section search down to the resolution that function
// comparisons allow (about sqrt(eps)), then a bracketed root search on a
// finite-difference derivative. The second stage is what lets a 40-digit
// run locate a minimizer to ~1e-32 instead of ~1e-20.
//
// minimize_nd: Nelder-Mead with restarts about the incumbent.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "ucover/error.hpp"
#include "ucover/numerics/real.hpp"

namespace ucover::numerics {

template <Real T>
struct MinimizeResult {
    std::vector<T> argmin;
    T min_value{};
    std::size_t iterations = 0;
    /// Final bracket (1-D) or simplex diameter (n-D) is <= the requested tolerance.
    bool converged = false;
    T final_width{};

    const T& x() const { return argmin.front(); }
};

namespace detail {

template <Real T, class F>
T checked_eval(F& f, const T& x) {
    T v = f(x);
    if (!is_finite(v)) throw EvaluationError("objective is not finite", to_double(x));
    return v;
}

template <Real T, class F>
T checked_eval_nd(F& f, const std::vector<T>& x) {
    T v = f(x);
    if (!is_finite(v)) {
        throw EvaluationError("objective is not finite", x.empty() ? 0.0 : to_double(x.front()));
    }
    return v;
}

}  // namespace detail

template <Real T, class F>
MinimizeResult<T> minimize_1d(F&& f, T lo, T hi, T tol) {
    using std::abs;
    using std::sqrt;
    if (!(lo < hi)) throw DomainError("minimize_1d: empty interval");
    if (!(tol > T(0))) throw DomainError("minimize_1d: tolerance must be positive");

    const T eps = real_epsilon<T>();
    const T inv_phi = (sqrt(T(5)) - T(1)) / T(2);
    const T golden_floor = T(4) * sqrt(eps);

    MinimizeResult<T> res;
    T a = lo;
    T b = hi;
    T x1 = b - inv_phi * (b - a);
    T x2 = a + inv_phi * (b - a);
    T f1 = detail::checked_eval(f, x1);
    T f2 = detail::checked_eval(f, x2);
    res.iterations = 2;

    const std::size_t max_iter = 100000;
    while (b - a > tol && b - a > golden_floor * (T(1) + abs(x1)) && res.iterations < max_iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = detail::checked_eval(f, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = detail::checked_eval(f, x2);
        }
        ++res.iterations;
    }

    if (b - a > tol) {
        // Derivative stage. Skipped when the derivative does not change sign
        // across the bracket, e.g. a minimum on the interval boundary.
        // Five-point stencil: truncation error ~h^4 against rounding noise
        // ~eps/h balances at h ~ eps^(1/5).
        const T h_rel = real_pow10<T>(-static_cast<int>(real_digits<T>()) / 5);
        auto deriv = [&](const T& x) {
            T h = h_rel * (T(1) + abs(x));
            if (x - T(2) * h >= lo && x + T(2) * h <= hi) {
                T d = (detail::checked_eval(f, x - T(2) * h) - T(8) * detail::checked_eval(f, x - h) +
                       T(8) * detail::checked_eval(f, x + h) - detail::checked_eval(f, x + T(2) * h)) /
                      (T(12) * h);
                res.iterations += 4;
                return d;
            }
            T lo_x = x - h < lo ? lo : x - h;
            T hi_x = x + h > hi ? hi : x + h;
            T d = (detail::checked_eval(f, hi_x) - detail::checked_eval(f, lo_x)) / (hi_x - lo_x);
            res.iterations += 2;
            return d;
        };
        T da = deriv(a);
        T db = deriv(b);
        if (da < T(0) && db > T(0)) {
            bool left_stale = false;
            bool right_stale = false;
            for (int k = 0; k < 400 && b - a > tol; ++k) {
                T x;
                if (k % 3 == 2) {
                    x = (a + b) / T(2);
                } else {
                    // Illinois regula falsi.
                    x = b - db * (b - a) / (db - da);
                    if (!(x > a && x < b)) x = (a + b) / T(2);
                }
                T dx = deriv(x);
                if (dx == T(0)) {
                    a = x;
                    b = x;
                    break;
                }
                if (dx < T(0)) {
                    a = x;
                    da = dx;
                    if (left_stale) db = db / T(2);
                    left_stale = true;
                    right_stale = false;
                } else {
                    b = x;
                    db = dx;
                    if (right_stale) da = da / T(2);
                    right_stale = true;
                    left_stale = false;
                }
            }
        } else if (da < T(0) && db < T(0) && hi - b <= T(2) * (b - a)) {
            // Still descending at the right end: boundary minimum.
            if (detail::checked_eval(f, hi) <= detail::checked_eval(f, b)) a = b = hi;
            res.iterations += 2;
        } else if (da > T(0) && db > T(0) && a - lo <= T(2) * (b - a)) {
            if (detail::checked_eval(f, lo) <= detail::checked_eval(f, a)) a = b = lo;
            res.iterations += 2;
        }
    }

    T x = (a + b) / T(2);
    T fx = detail::checked_eval(f, x);
    ++res.iterations;
    // With a boundary minimum the golden interior points can beat the midpoint.
    if (f1 < fx && x1 >= a && x1 <= b) {
        x = x1;
        fx = f1;
    }
    if (f2 < fx && x2 >= a && x2 <= b) {
        x = x2;
        fx = f2;
    }
    res.argmin = {x};
    res.min_value = fx;
    res.final_width = b - a;
    res.converged = !(b - a > tol);
    return res;
}

struct NelderMeadOptions {
    double initial_step = 0.1;
    std::size_t max_iterations = 20000;
    std::size_t restarts = 3;
};

template <Real T, class F>
MinimizeResult<T> minimize_nd(F&& f, std::vector<T> start, T tol, NelderMeadOptions opt = {}) {
    using std::abs;
    using std::sqrt;
    const std::size_t k = start.size();
    if (k == 0) throw DomainError("minimize_nd: empty start vector");
    if (!(tol > T(0))) throw DomainError("minimize_nd: tolerance must be positive");

    MinimizeResult<T> res;
    std::vector<T> best = std::move(start);
    T best_val = detail::checked_eval_nd(f, best);
    res.iterations = 1;

    auto diameter = [&](const std::vector<std::vector<T>>& s) {
        T d(0);
        for (std::size_t i = 1; i < s.size(); ++i) {
            T sq(0);
            for (std::size_t j = 0; j < k; ++j) sq += (s[i][j] - s[0][j]) * (s[i][j] - s[0][j]);
            T r = sqrt(sq);
            if (r > d) d = r;
        }
        return d;
    };

    T step(opt.initial_step);
    T width(0);
    for (std::size_t round = 0; round <= opt.restarts; ++round) {
        std::vector<std::vector<T>> simplex(k + 1, best);
        std::vector<T> vals(k + 1, best_val);
        for (std::size_t i = 0; i < k; ++i) {
            simplex[i + 1][i] += step;
            vals[i + 1] = detail::checked_eval_nd(f, simplex[i + 1]);
        }
        res.iterations += k;

        std::vector<std::size_t> order(k + 1);
        for (std::size_t it = 0; it < opt.max_iterations; ++it) {
            for (std::size_t i = 0; i <= k; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return vals[l] < vals[r]; });
            {
                std::vector<std::vector<T>> s2;
                std::vector<T> v2;
                for (std::size_t i : order) {
                    s2.push_back(simplex[i]);
                    v2.push_back(vals[i]);
                }
                simplex = std::move(s2);
                vals = std::move(v2);
            }
            width = diameter(simplex);
            if (width <= tol) break;

            std::vector<T> centroid(k, T(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) centroid[j] += simplex[i][j] / T(static_cast<int>(k));
            auto along = [&](const T& coef) {
                std::vector<T> p(k);
                for (std::size_t j = 0; j < k; ++j) p[j] = centroid[j] + coef * (simplex[k][j] - centroid[j]);
                return p;
            };
            std::vector<T> xr = along(T(-1));
            T fr = detail::checked_eval_nd(f, xr);
            ++res.iterations;
            if (fr < vals[0]) {
                std::vector<T> xe = along(T(-2));
                T fe = detail::checked_eval_nd(f, xe);
                ++res.iterations;
                if (fe < fr) {
                    simplex[k] = std::move(xe);
                    vals[k] = fe;
                } else {
                    simplex[k] = std::move(xr);
                    vals[k] = fr;
                }
                continue;
            }
            if (fr < vals[k - 1]) {
                simplex[k] = std::move(xr);
                vals[k] = fr;
                continue;
            }
            const bool outside = fr < vals[k];
            std::vector<T> xc = along(outside ? T(0.5) : T(-0.5));
            T fc = detail::checked_eval_nd(f, xc);
            ++res.iterations;
            if (fc < (outside ? fr : vals[k])) {
                simplex[k] = std::move(xc);
                vals[k] = fc;
                continue;
            }
            for (std::size_t i = 1; i <= k; ++i) {
                for (std::size_t j = 0; j < k; ++j) simplex[i][j] = simplex[0][j] + (simplex[i][j] - simplex[0][j]) / T(2);
                vals[i] = detail::checked_eval_nd(f, simplex[i]);
            }
            res.iterations += k;
        }

        const bool improved = vals[0] < best_val;
        if (vals[0] <= best_val) {
            best = simplex[0];
            best_val = vals[0];
        }
        if (!improved && round > 0) break;
        // Restart with a smaller simplex about the incumbent.
        step = step / T(10);
        if (step < tol) step = tol;
    }

    res.argmin = std::move(best);
    res.min_value = best_val;
    res.final_width = width;
    res.converged = width <= tol;
    return res;
}

}  // namespace ucover::numerics
