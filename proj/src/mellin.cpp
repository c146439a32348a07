#include "mbasym/mellin.hpp"

#include <cmath>

#include "mbasym/special.hpp"

namespace mbasym {

namespace {

// psi(x) * Gamma(x); finite wherever Gamma is.
Real psi_times_gamma(const Real& x) { return digamma(x) * gamma(x); }

struct Brackets {
    Real t1;
    Real t2;
};

// T1 and T2 by their defining series (generic lambda, cancellation left in).
Brackets bracket_terms(const Params& p, const Real& lam, long wd) {
    Real chi = p.chi().round_to(wd);
    Real nu = p.nu().round_to(wd);
    Real mu = p.mu().round_to(wd);
    Real lam_w = lam.round_to(wd);
    // T1 = sum_r Gamma(lam+r) / (Gamma(1+lam-mu+r) Gamma(1+nu+r)) chi^r / r!
    Real t1 = Real::zero(wd);
    {
        Real chpow = Real::from_long(1, wd);
        Real eps = ten_pow(-(wd + 5), wd);
        int quiet = 0;
        for (long r = 0;; ++r) {
            if (r > 20000) throw ConvergenceError("mellin: T1 series stalled");
            Real t = gamma(lam_w + r) * inv_gamma(1 + lam_w - mu + r) *
                     inv_gamma(1 + nu + r) * chpow;
            t1 += t;
            if (abs(t) <= eps * max(abs(t1), Real::from_long(1, wd))) {
                if (++quiet >= 3 && r >= 4) break;
            } else {
                quiet = 0;
            }
            chpow *= chi / (r + 1);
        }
    }
    // T2 = chi^(mu-lam) sum_n Gamma(mu+n)/(Gamma(1-lam+mu+n) Gamma(1-lam+mu+nu+n)) chi^n/n!
    Real t2 = Real::zero(wd);
    {
        Real chpow = Real::from_long(1, wd);
        Real eps = ten_pow(-(wd + 5), wd);
        int quiet = 0;
        for (long n = 0;; ++n) {
            if (n > 20000) throw ConvergenceError("mellin: T2 series stalled");
            Real t = gamma(mu + n) * inv_gamma(1 - lam_w + mu + n) *
                     inv_gamma(1 - lam_w + mu + nu + n) * chpow;
            t2 += t;
            if (abs(t) <= eps * max(abs(t2), Real::from_long(1, wd))) {
                if (++quiet >= 3 && n >= 4) break;
            } else {
                quiet = 0;
            }
            chpow *= chi / (n + 1);
        }
        t2 *= pow(chi, mu - lam_w);
    }
    return {t1, t2};
}

// Limit of [T1 - T2] / (mu - lambda - K) at integer K = mu - lambda: the
// epsilon-derivative of both series at the snapped point lambda = mu - K.
Real bracket_derivative(const Params& p, long k_int, long wd) {
    Real chi = p.chi().round_to(wd);
    Real nu = p.nu().round_to(wd);
    Real mu = p.mu().round_to(wd);
    Real lam = mu - k_int; // snapped lambda
    if (lam.is_integer() && lam.sign() <= 0) {
        throw PoleError("mellin: continued kernel has a pole at lambda = " +
                        lam.str(6));
    }

    // dT1/de = sum_r [-psiGamma(lam+r) invGamma(1-K+r)
    //                 + Gamma(lam+r) psiInvGamma(1-K+r)] invGamma(1+nu+r) chi^r/r!
    Real dt1 = Real::zero(wd);
    {
        Real chpow = Real::from_long(1, wd);
        Real eps = ten_pow(-(wd + 5), wd);
        int quiet = 0;
        for (long r = 0;; ++r) {
            if (r > 20000) throw ConvergenceError("mellin: dT1 series stalled");
            Real arg1 = 1 - k_int + Real::from_long(r, wd);
            Real t = (-psi_times_gamma(lam + r) * inv_gamma(arg1) +
                      gamma(lam + r) * psi_over_gamma(arg1)) *
                     inv_gamma(1 + nu + r) * chpow;
            dt1 += t;
            if (abs(t) <= eps * max(abs(dt1), Real::from_long(1, wd))) {
                if (++quiet >= 3 && r >= 4 + std::abs(k_int)) break;
            } else {
                quiet = 0;
            }
            chpow *= chi / (r + 1);
        }
    }

    // dT2/de = ln(chi) T2(0)
    //          - chi^K sum_n Gamma(mu+n) [psiInvGamma(1+K+n) invGamma(1+K+nu+n)
    //                + invGamma(1+K+n) psiInvGamma(1+K+nu+n)] chi^n/n!
    Real t2_0 = Real::zero(wd);
    Real dsum = Real::zero(wd);
    {
        Real chpow = Real::from_long(1, wd);
        Real eps = ten_pow(-(wd + 5), wd);
        int quiet = 0;
        for (long n = 0;; ++n) {
            if (n > 20000) throw ConvergenceError("mellin: dT2 series stalled");
            Real g1 = 1 + k_int + Real::from_long(n, wd);
            Real g2 = g1 + nu;
            Real gm = gamma(mu + n) * chpow;
            t2_0 += gm * inv_gamma(g1) * inv_gamma(g2);
            Real t = gm * (psi_over_gamma(g1) * inv_gamma(g2) +
                           inv_gamma(g1) * psi_over_gamma(g2));
            dsum += t;
            Real scale = max(abs(dsum), max(abs(t2_0), Real::from_long(1, wd)));
            if (abs(t) <= eps * scale && abs(gm * inv_gamma(g1) * inv_gamma(g2)) <= eps * scale) {
                if (++quiet >= 3 && n >= 4 + std::abs(k_int)) break;
            } else {
                quiet = 0;
            }
            chpow *= chi / (n + 1);
        }
    }
    Real chik = pow_si(chi, k_int);
    Real dt2 = log(chi) * (chik * t2_0) - chik * dsum;

    return dt1 - dt2;
}

Real eval_h(const Params& p, const Real& s, bool strip_checked) {
    long wd = std::min(p.digits(), s.digits());
    Real lam = p.lambda(s);
    if (lam.is_integer() && lam.sign() <= 0) {
        throw PoleError("mellin: H has a pole at s = " + s.str(6) +
                        " (lambda = " + lam.str(6) + ")");
    }
    (void)strip_checked;

    Real k_real = p.mu() - lam;
    Real k_round = round_nearest(k_real);
    Real dist = abs(k_real - k_round);
    Real b = p.coeff_b().round_to(wd);
    if (dist < Real::from_double(SNAP_EPS, 20)) {
        long k_int = k_round.to_long();
        Real deriv = bracket_derivative(p, k_int, wd);
        Real h = b * deriv;
        if (k_int % 2 != 0) h = -h;
        return h;
    }
    Brackets br = bracket_terms(p, lam, wd);
    Real pi = const_pi(wd);
    return pi * b * (br.t1 - br.t2) / sin(pi * k_real.round_to(wd));
}

} // namespace

Real mellin_q(const Params& p, const Real& s) {
    long wd = std::min(p.digits(), s.digits());
    Real lam = p.lambda(s);
    if (lam.is_integer() && lam.sign() <= 0) {
        throw PoleError("mellin_q: pole at lambda = " + lam.str(6));
    }
    Real k_real = p.mu() - lam;
    Real dist = abs(k_real - round_nearest(k_real));
    if (dist < Real::from_double(SNAP_EPS, 20)) {
        return Real::zero(wd);
    }
    Brackets br = bracket_terms(p, lam, wd);
    return br.t1 - br.t2;
}

Real mellin_q_raw(const Params& p, const Real& s) {
    long wd = std::min(p.digits(), s.digits());
    Real lam = p.lambda(s);
    if (lam.is_integer() && lam.sign() <= 0) {
        throw PoleError("mellin_q_raw: pole at lambda = " + lam.str(6));
    }
    Brackets br = bracket_terms(p, lam, wd);
    return br.t1 - br.t2;
}

Real mellin_h(const Params& p, const Real& s) {
    Real lower = -p.gam() - p.nu();
    Real upper = p.delta();
    if (!(s > lower && s < upper)) {
        Real lam = p.lambda(s);
        if (lam.is_integer() && lam.sign() <= 0) {
            throw PoleError("mellin_h: pole at s = " + s.str(6));
        }
        throw StripError("mellin_h: s = " + s.str(6) +
                         " outside the strip (" + lower.str(6) + ", " +
                         upper.str(6) + ")");
    }
    return eval_h(p, s, true);
}

Real mellin_h_continued(const Params& p, const Real& s) {
    return eval_h(p, s, false);
}

} // namespace mbasym
