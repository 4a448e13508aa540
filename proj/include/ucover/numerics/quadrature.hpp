#pragma once

#include <cstddef>

#include "ucover/error.hpp"
#include "ucover/numerics/real.hpp"

namespace ucover::numerics {

namespace detail {

template <Real T, class F>
struct SimpsonState {
    F& f;
    std::size_t evaluations = 0;
    // Deeper than this the subintervals fall below double spacing.
    int max_depth = 48;
    T worst_error{};
    bool exhausted = false;

    T eval(const T& x) {
        ++evaluations;
        T v = f(x);
        if (!is_finite(v)) throw EvaluationError("integrand is not finite", to_double(x));
        return v;
    }

    // Simpson's rule over [a, b] refined until the Richardson estimate of
    // its error is under tol.
    T refine(const T& a, const T& b, const T& fa, const T& fm, const T& fb, const T& whole, const T& tol,
             int depth) {
        using std::abs;
        T m = (a + b) / T(2);
        T lm = (a + m) / T(2);
        T rm = (m + b) / T(2);
        T flm = eval(lm);
        T frm = eval(rm);
        T left = (m - a) / T(6) * (fa + T(4) * flm + fm);
        T right = (b - m) / T(6) * (fm + T(4) * frm + fb);
        T delta = left + right - whole;
        if (abs(delta) <= T(15) * tol) return left + right + delta / T(15);
        if (depth >= max_depth) {
            exhausted = true;
            T e = abs(delta) / T(15);
            if (e > worst_error) worst_error = e;
            return left + right + delta / T(15);
        }
        return refine(a, m, fa, flm, fm, left, tol / T(2), depth + 1) +
               refine(m, b, fm, frm, fb, right, tol / T(2), depth + 1);
    }
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [lo, hi] to absolute tolerance tol.
/// Throws IntegrationError when the subdivision depth is exhausted.
template <Real T, class F>
T integrate(F&& f, T lo, T hi, T tol) {
    if (!(tol > T(0))) throw DomainError("integrate: tolerance must be positive");
    if (lo == hi) return T(0);
    detail::SimpsonState<T, F> st{f};
    // Split into a few panels first so that symmetric integrands cannot fool
    // the first Richardson estimate.
    constexpr int kPanels = 8;
    T total(0);
    const T width = (hi - lo) / T(kPanels);
    for (int i = 0; i < kPanels; ++i) {
        T a = lo + width * T(i);
        T b = i + 1 == kPanels ? hi : lo + width * T(i + 1);
        T fa = st.eval(a);
        T fb = st.eval(b);
        T m = (a + b) / T(2);
        T fm = st.eval(m);
        T whole = (b - a) / T(6) * (fa + T(4) * fm + fb);
        total += st.refine(a, b, fa, fm, fb, whole, tol / T(kPanels), 0);
    }
    if (st.exhausted) {
        throw IntegrationError("integrate: subdivision limit exceeded, error estimate " +
                                   std::to_string(to_double(st.worst_error)),
                               to_double(total));
    }
    return total;
}

}  // namespace ucover::numerics
