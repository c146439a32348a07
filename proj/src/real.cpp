#include "mbasym/real.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace mbasym {

namespace {
constexpr mpfr_rnd_t RND = MPFR_RNDN;
constexpr double LOG2_10 = 3.32192809488736234787; // log2(10)
} // namespace

long bits_for_digits(long digits) {
    if (digits < 1) digits = 1;
    return static_cast<long>(std::ceil(static_cast<double>(digits) * LOG2_10)) + 8;
}

// --- lifetime ----------------------------------------------------------------

Real::Real(long digits, bool) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits));
}

Real Real::make_raw(long digits) { return Real(digits, true); }

Real::Real(const Real& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, RND);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, RND);
        digits_ = other.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        digits_ = other.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

void swap(Real& a, Real& b) noexcept {
    mpfr_swap(a.v_, b.v_);
    long d = a.digits_;
    a.digits_ = b.digits_;
    b.digits_ = d;
}

// --- construction --------------------------------------------------------------

Real Real::zero(long digits) {
    Real r = make_raw(digits);
    mpfr_set_zero(r.v_, +1);
    return r;
}

Real Real::from_long(long n, long digits) {
    Real r = make_raw(digits);
    mpfr_set_si(r.v_, n, RND);
    return r;
}

Real Real::from_double(double x, long digits) {
    Real r = make_raw(digits);
    mpfr_set_d(r.v_, x, RND);
    return r;
}

Real Real::parse(const std::string& text, long digits) {
    Real r = make_raw(digits);
    const char* s = text.c_str();
    char* end = nullptr;
    int rc = mpfr_strtofr(r.v_, s, &end, 10, RND);
    (void)rc;
    // Reject empty parses and trailing junk.
    if (end == s || *end != '\0') {
        throw DomainError("Real::parse: not a valid decimal literal: '" + text + "'");
    }
    return r;
}

// --- inspection ----------------------------------------------------------------

bool Real::is_nan() const { return mpfr_nan_p(v_) != 0; }
bool Real::is_inf() const { return mpfr_inf_p(v_) != 0; }
bool Real::is_zero() const { return mpfr_zero_p(v_) != 0; }
bool Real::is_integer() const { return mpfr_integer_p(v_) != 0; }

int Real::sign() const {
    if (mpfr_nan_p(v_)) return 0;
    return mpfr_sgn(v_) > 0 ? 1 : (mpfr_sgn(v_) < 0 ? -1 : 0);
}

double Real::to_double() const { return mpfr_get_d(v_, RND); }

long Real::to_long() const {
    if (!mpfr_fits_slong_p(v_, RND)) {
        throw DomainError("Real::to_long: value does not fit in long");
    }
    return mpfr_get_si(v_, RND);
}

std::string Real::str(long sig) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    auto [mant, e] = mantissa_exp(sig);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%+03ld", e);
    return mant + buf;
}

std::pair<std::string, long> Real::mantissa_exp(long sig) const {
    if (sig < 1) sig = 1;
    if (mpfr_nan_p(v_) || mpfr_inf_p(v_)) {
        throw DomainError("Real::mantissa_exp: value is not finite");
    }
    if (mpfr_zero_p(v_)) {
        std::string m = "0";
        if (sig > 1) m += "." + std::string(static_cast<size_t>(sig - 1), '0');
        return {m, 0};
    }
    mpfr_exp_t e10 = 0;
    char* digits = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig), v_, RND);
    if (digits == nullptr) {
        throw PrecisionError("Real::mantissa_exp: mpfr_get_str failed");
    }
    std::string d(digits);
    mpfr_free_str(digits);

    std::string sign_part;
    if (!d.empty() && d[0] == '-') {
        sign_part = "-";
        d.erase(0, 1);
    }
    // mpfr_get_str semantics: value = 0.d * 10^e10, so d[0] is the leading digit
    // and the scientific exponent is e10 - 1.
    std::string m = sign_part + d.substr(0, 1);
    if (d.size() > 1) m += "." + d.substr(1);
    return {m, static_cast<long>(e10) - 1};
}

Real Real::round_to(long digits) const {
    Real r = make_raw(digits);
    mpfr_set(r.v_, v_, RND);
    return r;
}

// --- arithmetic ------------------------------------------------------------------

namespace {
long min_digits(const Real& a, const Real& b) {
    return a.digits() < b.digits() ? a.digits() : b.digits();
}
} // namespace

Real Real::operator-() const {
    Real r = make_raw(digits_);
    mpfr_neg(r.v_, v_, RND);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r = Real::make_raw(min_digits(a, b));
    mpfr_add(r.v_, a.v_, b.v_, RND);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r = Real::make_raw(min_digits(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, RND);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r = Real::make_raw(min_digits(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, RND);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (mpfr_zero_p(b.v_)) throw DomainError("Real: division by zero");
    Real r = Real::make_raw(min_digits(a, b));
    mpfr_div(r.v_, a.v_, b.v_, RND);
    return r;
}

Real operator+(const Real& a, long b) {
    Real r = Real::make_raw(a.digits_);
    mpfr_add_si(r.v_, a.v_, b, RND);
    return r;
}
Real operator-(const Real& a, long b) {
    Real r = Real::make_raw(a.digits_);
    mpfr_sub_si(r.v_, a.v_, b, RND);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r = Real::make_raw(a.digits_);
    mpfr_mul_si(r.v_, a.v_, b, RND);
    return r;
}
Real operator/(const Real& a, long b) {
    if (b == 0) throw DomainError("Real: division by zero");
    Real r = Real::make_raw(a.digits_);
    mpfr_div_si(r.v_, a.v_, b, RND);
    return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
    Real r = Real::make_raw(b.digits_);
    mpfr_si_sub(r.v_, a, b.v_, RND);
    return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
    if (mpfr_zero_p(b.v_)) throw DomainError("Real: division by zero");
    Real r = Real::make_raw(b.digits_);
    mpfr_si_div(r.v_, a, b.v_, RND);
    return r;
}

Real& Real::operator+=(const Real& b) { return *this = *this + b; }
Real& Real::operator-=(const Real& b) { return *this = *this - b; }
Real& Real::operator*=(const Real& b) { return *this = *this * b; }
Real& Real::operator/=(const Real& b) { return *this = *this / b; }

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0 && !a.is_nan(); }
bool operator<(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) < 0; }
bool operator>(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) > 0; }
bool operator<=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) <= 0; }
bool operator>=(const Real& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.raw(), b) >= 0; }

// --- elementary functions ----------------------------------------------------------

namespace {
template <typename F>
Real unary(const Real& x, F op) {
    Real r = x; // copy carries precision
    op(r.raw(), x.raw(), RND);
    return r;
}
} // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqr(const Real& x) { return unary(x, mpfr_sqr); }

Real sqrt(const Real& x) {
    if (x.sign() < 0) throw DomainError("sqrt: negative argument");
    return unary(x, mpfr_sqrt);
}

Real exp(const Real& x) { return unary(x, mpfr_exp); }

Real log(const Real& x) {
    if (x.sign() <= 0) throw DomainError("log: non-positive argument");
    return unary(x, mpfr_log);
}

Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }

void sin_cos(Real& s, Real& c, const Real& x) {
    s = x;
    c = x;
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), RND);
}

Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real floor(const Real& x) {
    Real r = x;
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real ceil(const Real& x) {
    Real r = x;
    mpfr_ceil(r.raw(), x.raw());
    return r;
}

Real round_nearest(const Real& x) {
    Real r = x;
    mpfr_rint(r.raw(), x.raw(), RND);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r = Real::zero(x.digits() < y.digits() ? x.digits() : y.digits());
    mpfr_pow(r.raw(), x.raw(), y.raw(), RND);
    if (r.is_nan()) throw DomainError("pow: undefined for these arguments");
    return r;
}

Real pow_si(const Real& x, long n) {
    Real r = x;
    mpfr_pow_si(r.raw(), x.raw(), n, RND);
    if (r.is_nan()) throw DomainError("pow_si: undefined for these arguments");
    return r;
}

Real rootn(const Real& x, unsigned long k) {
    if (k == 0) throw DomainError("rootn: zeroth root");
    if (x.sign() < 0 && k % 2 == 0) {
        throw DomainError("rootn: even root of negative value");
    }
    Real r = x;
    mpfr_rootn_ui(r.raw(), x.raw(), k, RND);
    return r;
}

Real ten_pow(long k, long digits) {
    Real r = Real::zero(digits);
    mpfr_set_si(r.raw(), 10, RND);
    mpfr_pow_si(r.raw(), r.raw(), k, RND);
    return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

// --- constants -------------------------------------------------------------------------

Real const_pi(long digits) {
    Real r = Real::zero(digits);
    mpfr_const_pi(r.raw(), RND);
    return r;
}

Real const_euler(long digits) {
    Real r = Real::zero(digits);
    mpfr_const_euler(r.raw(), RND);
    return r;
}

Real const_log2(long digits) {
    Real r = Real::zero(digits);
    mpfr_const_log2(r.raw(), RND);
    return r;
}

// --- PrecisionCtx ------------------------------------------------------------------------

PrecisionCtx::PrecisionCtx(long digits) : digits_(digits) {
    if (digits < 20) {
        throw DomainError("PrecisionCtx: at least 20 digits required");
    }
}

} // namespace mbasym
