#pragma once

// Precision-parameterized scalars.
//
// Native mode is plain `double`. High-precision mode is `BigReal`, a value
// type over an MPFR float whose precision is fixed at construction time from
// the calling thread's `PrecisionScope`. Binary operations round to the larger
// precision of the two operands, so mixing values created under different
// scopes never loses digits silently.
//
// Generic code is written against the free functions below (`real_pi<T>()`,
// `real_epsilon<T>()`, `to_double`, ...) plus ADL-visible `sin`, `cos`, ...

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

namespace ucover::numerics {

inline constexpr unsigned kDefaultHighDigits = 40;

/// Sets the number of significant decimal digits used for BigReal values
/// created on the current thread; restores the previous setting on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

    static unsigned current_digits();

private:
    unsigned previous_;
};

class BigReal {
public:
    BigReal();
    BigReal(double v);  // NOLINT(google-explicit-constructor): exact widening
    BigReal(int v);     // NOLINT(google-explicit-constructor)
    explicit BigReal(std::string_view decimal);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    /// Significant decimal digits this value carries.
    unsigned digits() const;
    double to_double() const;
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    /// Scientific-free decimal rendering with `sig` significant digits.
    /// `truncate` rounds toward zero, matching the output of `bc`.
    std::string str(unsigned sig, bool truncate = false) const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal operator-() const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

    friend BigReal sin(const BigReal& x);
    friend BigReal cos(const BigReal& x);
    friend BigReal tan(const BigReal& x);
    friend BigReal acos(const BigReal& x);
    friend BigReal asin(const BigReal& x);
    friend BigReal atan(const BigReal& x);
    friend BigReal sqrt(const BigReal& x);
    friend BigReal abs(const BigReal& x);
    friend BigReal fabs(const BigReal& x) { return abs(x); }

    static BigReal pi();
    /// 10^exponent at the current scope precision.
    static BigReal pow10(int exponent);

    mpfr_srcptr raw() const { return v_; }

private:
    explicit BigReal(mpfr_prec_t bits);
    static mpfr_prec_t max_bits(const BigReal& a, const BigReal& b);

    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

template <class T>
concept Real = std::same_as<T, double> || std::same_as<T, BigReal>;

inline double to_double(double x) { return x; }
inline double to_double(const BigReal& x) { return x.to_double(); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const BigReal& x) { return x.is_finite(); }

template <Real T>
T real_pi() {
    if constexpr (std::same_as<T, double>) {
        return 3.14159265358979323846264338327950288;
    } else {
        return BigReal::pi();
    }
}

/// Relative resolution of the working precision: DBL_EPSILON natively,
/// 10^(-digits) in high-precision mode.
template <Real T>
T real_epsilon() {
    if constexpr (std::same_as<T, double>) {
        return std::numeric_limits<double>::epsilon();
    } else {
        return BigReal::pow10(-static_cast<int>(PrecisionScope::current_digits()));
    }
}

/// Decimal digits of the working precision.
template <Real T>
unsigned real_digits() {
    if constexpr (std::same_as<T, double>) {
        return std::numeric_limits<double>::digits10;
    } else {
        return PrecisionScope::current_digits();
    }
}

template <Real T>
T real_pow10(int exponent) {
    if constexpr (std::same_as<T, double>) {
        return std::pow(10.0, exponent);
    } else {
        return BigReal::pow10(exponent);
    }
}

template <Real T>
T real_from_string(std::string_view s) {
    if constexpr (std::same_as<T, double>) {
        return std::stod(std::string(s));
    } else {
        return BigReal(s);
    }
}

/// Default minimization/quadrature tolerance: 1e-12 natively,
/// 10^(2 - digits) in high-precision mode.
template <Real T>
T default_tolerance() {
    if constexpr (std::same_as<T, double>) {
        return 1e-12;
    } else {
        return BigReal::pow10(2 - static_cast<int>(PrecisionScope::current_digits()));
    }
}

}  // namespace ucover::numerics
