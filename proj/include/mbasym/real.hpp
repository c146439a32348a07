#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mbasym/errors.hpp"

namespace mbasym {

// Number of mantissa bits needed to represent `digits` decimal digits,
// plus a small fixed cushion so that decimal round trips are safe.
long bits_for_digits(long digits);

// Arbitrary-precision real number backed by MPFR.
//
// Every Real carries its own decimal precision P (>= 1).  All operations
// round once, to nearest, into the result's precision, so each individual
// operation is accurate to 1 ulp at that precision.  Binary operations
// propagate the *minimum* of the two operand precisions: precision is a
// certificate, and combining a P-digit value with a Q-digit value can
// certify no more than min(P, Q) digits.
class Real {
public:
    Real() = delete;
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    // --- construction ------------------------------------------------------
    static Real zero(long digits);
    static Real from_long(long n, long digits);
    static Real from_double(double x, long digits);
    // Parses a decimal literal ("1.5", "-3e-7", ...).  DomainError on junk.
    static Real parse(const std::string& text, long digits);

    // --- inspection --------------------------------------------------------
    long digits() const { return digits_; }
    bool is_nan() const;
    bool is_inf() const;
    bool is_zero() const;
    bool is_integer() const;
    int sign() const; // -1, 0, +1 (0 for NaN as well)

    double to_double() const;
    long to_long() const; // rounds to nearest; DomainError if not representable

    // Scientific-notation rendering with `sig` significant digits,
    // e.g. "1.08383e-03".  NaN/Inf render as "nan"/"inf"/"-inf".
    std::string str(long sig) const;

    // Mantissa/exponent split after rounding to `sig` significant digits:
    // returns {"1.08383", -3} for 1.08383e-03 (mantissa includes sign).
    std::pair<std::string, long> mantissa_exp(long sig) const;

    // Copy re-rounded to a different precision.
    Real round_to(long digits) const;

    // Raw handle for tight loops inside the library.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // --- arithmetic ---------------------------------------------------------
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b); // DomainError on /0

    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(long a, const Real& b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, const Real& b);
    friend Real operator/(long a, const Real& b);

    Real& operator+=(const Real& b);
    Real& operator-=(const Real& b);
    Real& operator*=(const Real& b);
    Real& operator/=(const Real& b);

    // --- comparison (NaN compares false, as for built-in floats) -----------
    friend bool operator==(const Real& a, const Real& b);
    friend bool operator!=(const Real& a, const Real& b);
    friend bool operator<(const Real& a, const Real& b);
    friend bool operator<=(const Real& a, const Real& b);
    friend bool operator>(const Real& a, const Real& b);
    friend bool operator>=(const Real& a, const Real& b);

    friend bool operator==(const Real& a, long b);
    friend bool operator<(const Real& a, long b);
    friend bool operator>(const Real& a, long b);
    friend bool operator<=(const Real& a, long b);
    friend bool operator>=(const Real& a, long b);

    friend void swap(Real& a, Real& b) noexcept;

private:
    explicit Real(long digits, bool); // uninitialised value at given precision
    static Real make_raw(long digits);

    mpfr_t v_;
    long digits_;
};

// --- elementary functions (result precision = argument precision; for
// two-argument forms, the minimum of the two) -------------------------------
Real abs(const Real& x);
Real sqr(const Real& x);
Real sqrt(const Real& x); // DomainError for x < 0
Real exp(const Real& x);
Real log(const Real& x); // DomainError for x <= 0
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(Real& s, Real& c, const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real floor(const Real& x);
Real ceil(const Real& x);
Real round_nearest(const Real& x);

Real pow(const Real& x, const Real& y); // DomainError if result undefined
Real pow_si(const Real& x, long n);
Real rootn(const Real& x, unsigned long k); // k-th root; DomainError x<0, k even
Real ten_pow(long k, long digits);          // 10^k

Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

// --- constants --------------------------------------------------------------
Real const_pi(long digits);
Real const_euler(long digits); // Euler-Mascheroni gamma
Real const_log2(long digits);

// Evaluation context: target precision plus fixed guard digits.  All library
// entry points compute internally at working_digits() and certify digits().
class PrecisionCtx {
public:
    explicit PrecisionCtx(long digits); // digits < 20 -> DomainError
    long digits() const { return digits_; }
    long guard() const { return 10; }
    long working_digits() const { return digits_ + guard(); }

    Real make(long n) const { return Real::from_long(n, working_digits()); }
    Real make(const std::string& s) const {
        return Real::parse(s, working_digits());
    }

private:
    long digits_;
};

} // namespace mbasym
