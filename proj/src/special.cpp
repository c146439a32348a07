#include "mbasym/special.hpp"

#include <cmath>

namespace mbasym {

namespace {
constexpr mpfr_rnd_t RND = MPFR_RNDN;

bool is_nonpositive_integer(const Real& x) {
    return x.is_integer() && x.sign() <= 0;
}
} // namespace

Real gamma(const Real& x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at non-positive integer " + x.str(6));
    }
    Real r = x;
    mpfr_gamma(r.raw(), x.raw(), RND);
    return r;
}

Real digamma(const Real& x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("digamma: pole at non-positive integer " + x.str(6));
    }
    Real r = x;
    mpfr_digamma(r.raw(), x.raw(), RND);
    return r;
}

Real zeta(const Real& s) {
    Real d = abs(s - 1);
    if (d < Real::parse("1e-12", 20)) {
        throw PoleError("zeta: inside exclusion radius 1e-12 of the pole at s = 1");
    }
    Real r = s;
    mpfr_zeta(r.raw(), s.raw(), RND);
    return r;
}

Real inv_gamma(const Real& x) {
    if (is_nonpositive_integer(x)) return Real::zero(x.digits());
    Real g = x;
    mpfr_gamma(g.raw(), x.raw(), RND);
    return 1 / g;
}

Real psi_over_gamma(const Real& x) {
    if (is_nonpositive_integer(x)) {
        // Near x = -j: psi(x) ~ -1/(x+j) and 1/Gamma(x) ~ (-1)^j j! (x+j),
        // so the product tends to (-1)^(j+1) j!.
        long j = -x.to_long();
        Real f = factorial(j, x.digits());
        return (j % 2 == 0) ? -f : f;
    }
    return digamma(x) * inv_gamma(x);
}

Real pochhammer(const Real& x, long n) {
    if (n < 0) throw DomainError("pochhammer: negative n");
    Real p = Real::from_long(1, x.digits());
    for (long i = 0; i < n; ++i) p *= (x + i);
    return p;
}

Real factorial(long n, long digits) {
    if (n < 0) throw DomainError("factorial: negative n");
    Real r = Real::zero(digits);
    mpfr_fac_ui(r.raw(), static_cast<unsigned long>(n), RND);
    return r;
}

// --- Bessel J ----------------------------------------------------------------

namespace {

// Ascending series J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-u)^k / (k! (nu+1)_k),
// u = x^2/4.  Requires nu not a negative integer (callers reflect first).
// The alternating sum cancels down from terms of size ~e^x to a result of
// size ~x^(-1/2), so the working precision carries ~0.9*x extra digits.
Real bessel_j_series(const Real& nu, const Real& x, long digits) {
    double xd = x.to_double();
    long wd = digits + 20 + static_cast<long>(std::ceil(0.9 * xd));
    Real u = sqr(x.round_to(wd)) / 4;
    Real nu_w = nu.round_to(wd);

    Real term = Real::from_long(1, wd);
    Real sum = term;
    Real cutoff = ten_pow(-(wd + 5), wd);
    long k_cap = 1000 + 10 * static_cast<long>(xd);
    for (long k = 0;; ++k) {
        if (k > k_cap) {
            throw ConvergenceError("bessel_j: ascending series failed to converge");
        }
        term *= -u / ((k + 1) * (nu_w + (k + 1)));
        sum += term;
        if (abs(term) < cutoff && k > static_cast<long>(xd) / 2) break;
    }
    Real half_x = x.round_to(wd) / 2;
    Real pref = pow(half_x, nu_w) * inv_gamma(nu_w + 1);
    return (pref * sum).round_to(digits);
}

// Large-argument expansion
//   J_nu(x) = sqrt(2/(pi x)) [P cos w - Q sin w],  w = x - (nu/2 + 1/4) pi,
//   P = t0 - t2 + t4 - ...,  Q = t1 - t3 + ...,
//   t0 = 1,  t_{k+1} = t_k (4 nu^2 - (2k+1)^2) / (8 (k+1) x).
// Terms initially decay; truncation just before the first growing term gives
// an error of the order of the first omitted term (relative to the O(1)
// amplitude of P and Q).
Real bessel_j_hankel(const Real& nu, const Real& x, long digits) {
    long wd = digits + 25;
    Real xw = x.round_to(wd);
    Real four_nu2 = 4 * sqr(nu.round_to(wd));

    Real t = Real::from_long(1, wd);
    Real p = t;
    Real q = Real::zero(wd);
    Real tiny = ten_pow(-(digits + 8), wd);
    Real omitted = Real::zero(wd);
    int sign_p = -1; // sign applied to the next even-index term (t2)
    int sign_q = +1; // sign applied to the next odd-index term (t1)
    for (long k = 0;; ++k) {
        Real t_next = t * (four_nu2 - (2 * k + 1) * (2 * k + 1)) / ((8 * (k + 1)) * xw);
        if (abs(t_next) >= abs(t)) {
            omitted = abs(t_next); // first omitted term certifies the tail
            break;
        }
        if ((k + 1) % 2 == 1) {
            q += sign_q > 0 ? t_next : -t_next;
            sign_q = -sign_q;
        } else {
            p += sign_p > 0 ? t_next : -t_next;
            sign_p = -sign_p;
        }
        t = t_next;
        if (abs(t) < tiny) {
            omitted = abs(t);
            break;
        }
        if (k > 4 * wd + 100) {
            throw ConvergenceError("bessel_j: large-argument expansion stalled");
        }
    }
    if (4 * omitted > ten_pow(-(digits + 2), wd)) {
        throw PrecisionError(
            "bessel_j: cannot certify " + std::to_string(digits) +
            " digits at x = " + x.str(6) + " with the large-argument expansion");
    }

    // Phase needs extra digits to absorb the magnitude of x before sin/cos.
    double xd = x.to_double();
    long extra = xd > 1 ? static_cast<long>(std::ceil(std::log10(xd))) : 0;
    long wd2 = wd + extra + 6;
    Real w = x.round_to(wd2) - (nu.round_to(wd2) / 2 + Real::parse("0.25", wd2)) * const_pi(wd2);
    Real sw = Real::zero(wd2);
    Real cw = Real::zero(wd2);
    sin_cos(sw, cw, w);

    Real amp = sqrt(2 / (const_pi(wd) * xw));
    Real j = amp * (p * cw.round_to(wd) - q * sw.round_to(wd));
    return j.round_to(digits);
}

} // namespace

Real bessel_j(const Real& nu, const Real& x, long digits) {
    if (x.sign() <= 0 || x > 1000000L) {
        throw DomainError("bessel_j: requires 0 < x <= 1e6, got x = " + x.str(6));
    }
    if (nu.is_integer() && nu.sign() < 0) {
        // J_{-m}(x) = (-1)^m J_m(x)
        long m = -nu.to_long();
        Real j = bessel_j(-nu, x, digits);
        return (m % 2 == 0) ? j : -j;
    }
    // Crossover: the ascending series certifies everywhere but costs ~0.9*x
    // guard digits; the large-argument branch certifies `digits` once
    // x >= ~1.16*digits.  max(30, 1.2*digits + 4) keeps both sides covered.
    double crossover = std::max(30.0, 1.2 * static_cast<double>(digits) + 4.0);
    if (x.to_double() <= crossover) {
        return bessel_j_series(nu, x, digits);
    }
    return bessel_j_hankel(nu, x, digits);
}

Real bessel_i(const Real& nu, const Real& x, long digits) {
    if (x.sign() <= 0) {
        throw DomainError("bessel_i: requires x > 0, got x = " + x.str(6));
    }
    if (nu.is_integer() && nu.sign() < 0) {
        return bessel_i(-nu, x, digits); // I_{-m}(x) = I_m(x)
    }
    double xd = x.to_double();
    long wd = digits + 15;
    Real u = sqr(x.round_to(wd)) / 4;
    Real nu_w = nu.round_to(wd);

    Real term = Real::from_long(1, wd);
    Real sum = term;
    Real cutoff = ten_pow(-(wd + 5), wd);
    long k_cap = 1000 + 10 * static_cast<long>(xd);
    for (long k = 0;; ++k) {
        if (k > k_cap) {
            throw ConvergenceError("bessel_i: series failed to converge");
        }
        term *= u / ((k + 1) * (nu_w + (k + 1)));
        sum += term;
        // Signed quantities: for nu < 0 the early terms alternate in sign.
        if (abs(term) < cutoff * max(abs(sum), Real::from_long(1, wd)) &&
            k > static_cast<long>(xd) / 2) {
            break;
        }
    }
    Real pref = pow(x.round_to(wd) / 2, nu_w) * inv_gamma(nu_w + 1);
    return (pref * sum).round_to(digits);
}

// --- regularized hypergeometrics ------------------------------------------------

namespace {

// Shared driver: terms = num_n * chi^n / (n! * prod_j Gamma(b_j + n)).
// The numerator Pochhammer products may legitimately hit zero (terminating
// series); the Gamma factors are handled through inv_gamma so that
// non-positive integer lower parameters contribute zero terms rather than
// poles.  Stops after three consecutive negligible terms.
template <typename NumStep, typename DenTerm>
Real hyp_driver(NumStep num_step, DenTerm den_term, const Real& chi, long digits,
                const char* name) {
    long wd = digits + 15;
    Real sum = Real::zero(wd);
    Real chi_pow = Real::from_long(1, wd); // chi^n / n!
    Real num = Real::from_long(1, wd);     // running numerator Pochhammers
    Real chi_w = chi.round_to(wd);
    Real eps = ten_pow(-(wd + 5), wd);
    int quiet = 0;
    for (long n = 0;; ++n) {
        if (n > 20000) {
            throw ConvergenceError(std::string(name) + ": series failed to converge");
        }
        Real t = num * chi_pow * den_term(n, wd);
        sum += t;
        if (abs(t) <= eps * max(abs(sum), Real::from_long(1, wd))) {
            if (++quiet >= 3 && n >= 4) break;
        } else {
            quiet = 0;
        }
        num *= num_step(n, wd);
        chi_pow *= chi_w / (n + 1);
    }
    return sum.round_to(digits);
}

} // namespace

Real hyp1f2_reg(const Real& a, const Real& b1, const Real& b2,
                const Real& chi, long digits) {
    long wd = digits + 15;
    Real aw = a.round_to(wd), b1w = b1.round_to(wd), b2w = b2.round_to(wd);
    return hyp_driver(
        [&](long n, long) { return aw + n; },
        [&](long n, long) { return inv_gamma(b1w + n) * inv_gamma(b2w + n); },
        chi, digits, "hyp1f2_reg");
}

Real hyp2f3_reg(const Real& a1, const Real& a2, const Real& b1,
                const Real& b2, const Real& b3, const Real& chi, long digits) {
    long wd = digits + 15;
    Real a1w = a1.round_to(wd), a2w = a2.round_to(wd);
    Real b1w = b1.round_to(wd), b2w = b2.round_to(wd), b3w = b3.round_to(wd);
    return hyp_driver(
        [&](long n, long) { return (a1w + n) * (a2w + n); },
        [&](long n, long) {
            return inv_gamma(b1w + n) * inv_gamma(b2w + n) * inv_gamma(b3w + n);
        },
        chi, digits, "hyp2f3_reg");
}

} // namespace mbasym
