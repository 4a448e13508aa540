#include "ucover/numerics/real.hpp"

#include <algorithm>
#include <utility>

#include "ucover/error.hpp"

namespace ucover::numerics {
namespace {

thread_local unsigned t_digits = kDefaultHighDigits;

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t bits_for_digits(unsigned digits) {
    // log2(10) bits per digit plus guard bits so the last requested digit is
    // correctly rounded.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

unsigned digits_for_bits(mpfr_prec_t bits) {
    return static_cast<unsigned>(std::floor((bits - 8) / 3.3219280948873623 + 1e-9));
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned digits) : previous_(t_digits) {
    if (digits < 2) throw DomainError("precision must be at least 2 digits");
    t_digits = digits;
}

PrecisionScope::~PrecisionScope() { t_digits = previous_; }

unsigned PrecisionScope::current_digits() { return t_digits; }

BigReal::BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

BigReal::BigReal() : BigReal(bits_for_digits(t_digits)) { mpfr_set_zero(v_, 1); }

BigReal::BigReal(double v) : BigReal(bits_for_digits(t_digits)) { mpfr_set_d(v_, v, kRound); }

BigReal::BigReal(int v) : BigReal(bits_for_digits(t_digits)) { mpfr_set_si(v_, v, kRound); }

BigReal::BigReal(std::string_view decimal) : BigReal(bits_for_digits(t_digits)) {
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, kRound) != 0) {
        mpfr_clear(v_);
        throw DomainError("not a decimal number: '" + s + "'");
    }
}

BigReal::BigReal(const BigReal& other) : BigReal(mpfr_get_prec(other.v_)) {
    mpfr_set(v_, other.v_, kRound);
}

BigReal::BigReal(BigReal&& other) noexcept : BigReal(mpfr_get_prec(other.v_)) {
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, kRound);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

unsigned BigReal::digits() const { return digits_for_bits(mpfr_get_prec(v_)); }

double BigReal::to_double() const { return mpfr_get_d(v_, kRound); }

std::string BigReal::str(unsigned sig, bool truncate) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) < 0 ? "-inf" : "inf");
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, sig, v_, truncate ? MPFR_RNDZ : MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!digits.empty() && digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
    } else if (static_cast<std::size_t>(exp) >= digits.size()) {
        out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<std::size_t>(exp)) + "." + digits.substr(static_cast<std::size_t>(exp));
    }
    return sign + out;
}

mpfr_prec_t BigReal::max_bits(const BigReal& a, const BigReal& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal BigReal::operator-() const {
    BigReal r(mpfr_get_prec(v_));
    mpfr_neg(r.v_, v_, kRound);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(BigReal::max_bits(a, b));
    mpfr_add(r.v_, a.v_, b.v_, kRound);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(BigReal::max_bits(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, kRound);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(BigReal::max_bits(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, kRound);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(BigReal::max_bits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, kRound);
    return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

#define UCOVER_BIGREAL_UNARY(name, fn)            \
    BigReal name(const BigReal& x) {              \
        BigReal r(mpfr_get_prec(x.v_));           \
        fn(r.v_, x.v_, kRound);                   \
        return r;                                 \
    }

UCOVER_BIGREAL_UNARY(sin, mpfr_sin)
UCOVER_BIGREAL_UNARY(cos, mpfr_cos)
UCOVER_BIGREAL_UNARY(tan, mpfr_tan)
UCOVER_BIGREAL_UNARY(acos, mpfr_acos)
UCOVER_BIGREAL_UNARY(asin, mpfr_asin)
UCOVER_BIGREAL_UNARY(atan, mpfr_atan)
UCOVER_BIGREAL_UNARY(sqrt, mpfr_sqrt)
UCOVER_BIGREAL_UNARY(abs, mpfr_abs)

#undef UCOVER_BIGREAL_UNARY

BigReal BigReal::pi() {
    BigReal r;
    mpfr_const_pi(r.v_, kRound);
    return r;
}

BigReal BigReal::pow10(int exponent) {
    BigReal r;
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), kRound);
    if (exponent < 0) mpfr_ui_div(r.v_, 1, r.v_, kRound);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
    return os << x.str(x.digits());
}

}  // namespace ucover::numerics
