#include "mbasym/asymptotics.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "mbasym/errors.hpp"
#include "mbasym/mellin.hpp"
#include "mbasym/special.hpp"

namespace mbasym {
namespace {

constexpr long GUARD = 10;

long working(const Params& p) { return p.digits() + GUARD; }

// a^(-nu-2mu) (b/2)^nu / Gamma(1+nu), the scale of every inverse-power term.
Real power_prefactor(const Params& p, long wd) {
    Real e = -(p.nu() + 2 * p.mu());
    return pow(p.a().round_to(wd), e) * pow(p.b() / 2, p.nu().round_to(wd)) *
           inv_gamma(1 + p.nu().round_to(wd));
}

bool is_even_integer(const Real& w) {
    if (!w.is_integer()) return false;
    return w.to_long() % 2 == 0;
}

// Shared generator for the theorem1/theorem2 inverse-power series.
ExpansionReport power_series(const Params& p, long k_first,
                             std::optional<long> requested_k, Regime regime) {
    long wd = working(p);
    Real pref = power_prefactor(p, wd);
    Real a2inv = 1 / sqr(p.a().round_to(wd));

    long k_stop_hint = -1; // exclusive upper bound on generated k, if explicit
    if (requested_k) {
        if (*requested_k < k_first) {
            throw DomainError("power series: K below the first index");
        }
        if (*requested_k > K_MAX) {
            throw DomainError("power series: K exceeds K_MAX = " +
                              std::to_string(K_MAX));
        }
        k_stop_hint = *requested_k + 2; // one extra term for err_est
    }

    std::vector<Real> terms;
    // (mu)_k / k! * a^(-2k), maintained incrementally.
    Real factor = Real::from_long(1, wd);
    {
        // advance from k = 0 to k = k_first
        for (long k = 0; k < k_first; ++k) {
            factor *= (p.mu() + k) * a2inv / (k + 1);
        }
    }

    std::size_t best = 0;
    int grow = 0;
    for (long k = k_first;; ++k) {
        if (requested_k && k >= k_stop_hint) break;
        if (k - k_first >= K_MAX + 2) break;

        Real zv = zeta(-p.omega(k).round_to(wd));
        Real t = pref * factor * zv * coeff_F(p, k);
        if (k % 2 != 0) t = -t;
        terms.push_back(t);

        if (!requested_k) {
            std::size_t i = terms.size() - 1;
            if (i > 0) {
                if (abs(terms[i]) < abs(terms[best])) {
                    best = i;
                    grow = 0;
                } else if (++grow >= 2) {
                    break;
                }
            }
        }
        factor *= (p.mu() + k) * a2inv / (k + 1);
    }

    long k_o = k_first + optimal_truncate(terms);
    long k_used = requested_k ? *requested_k + 1 : k_o;

    Real value = Real::zero(wd);
    for (long k = k_first; k < k_used; ++k) {
        value += terms[static_cast<std::size_t>(k - k_first)];
    }
    std::size_t omit = static_cast<std::size_t>(k_used - k_first);
    Real err = omit < terms.size() ? abs(terms[omit]) : abs(terms.back());

    return ExpansionReport{std::move(value), std::move(terms), k_first,
                           k_used, k_o, std::move(err), regime};
}

Real cprime_impl(const Params& p, long m, int j, long wd) {
    Real b = p.b().round_to(wd);
    Real i0 = bessel_i(p.nu(), b, wd);
    Real r1 = bessel_i(p.nu() + 1, b, wd) / i0;
    Real one_minus_mu = 1 - p.mu().round_to(wd);
    if (j == 1) return one_minus_mu * b * r1;
    Real r2 = bessel_i(p.nu() + 2, b, wd) / i0;
    return one_minus_mu * b *
           ((2 * m + 1 - p.mu()) * r1 + (2 - p.mu()) * (b / 2) * r2);
}

Real c_impl(const Params& p, long m, int j, long wd) {
    Real mu = p.mu().round_to(wd);
    if (j == 1) return (1 - mu) * (4 * m - mu) / 2;
    return (1 - mu) * (2 - mu) *
           (Real::from_long(16 * m * m, wd) + (1 + mu) * (mu - 8 * m)) / 8;
}

Real d_impl(const Params& p, long m, int j, long wd) {
    if (j == 0) return Real::from_long(1, wd);
    if (j == 1) return c_impl(p, m, 1, wd) + cprime_impl(p, m, 1, wd);
    return c_impl(p, m, 2, wd) + cprime_impl(p, m, 2, wd) +
           c_impl(p, m, 1, wd) * cprime_impl(p, m, 1, wd);
}

void require_expsmall(const Params& p, long m, const char* who) {
    if (classify_regime(p) != Regime::ExpSmall || m != expsmall_m(p)) {
        throw RegimeError(std::string(who) +
                          ": requires g + nu = 2m with the given m");
    }
}

} // namespace

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Generic: return "Generic";
        case Regime::DoublePole: return "DoublePole";
        case Regime::ExpSmall: return "ExpSmall";
    }
    return "?";
}

Regime classify_regime(const Params& p) {
    Real w = p.gam() + p.nu();
    if (!w.is_integer()) return Regime::Generic;
    long wi = w.to_long();
    if (wi < 0 && wi % 2 != 0) return Regime::DoublePole;
    if (wi >= 0 && wi % 2 == 0) return Regime::ExpSmall;
    return Regime::Generic;
}

long expsmall_m(const Params& p) {
    if (classify_regime(p) != Regime::ExpSmall) {
        throw RegimeError("expsmall_m: g + nu is not a non-negative even integer");
    }
    return (p.gam() + p.nu()).to_long() / 2;
}

const Real& ExpansionReport::term(long k) const {
    long i = k - k_first;
    if (i < 0 || static_cast<std::size_t>(i) >= terms.size()) {
        throw DomainError("ExpansionReport::term: index " + std::to_string(k) +
                          " outside the generated window");
    }
    return terms[static_cast<std::size_t>(i)];
}

Real coeff_F(const Params& p, long k) {
    if (k < 0) throw DomainError("coeff_F: k must be non-negative");
    long wd = working(p);
    if (k == 0) return Real::from_long(1, wd);

    // sum_{n=0}^{k} (-k)_n / ((1-mu-k)_n (1+nu)_n) chi^n / n!
    // At mu = 1 the numerator and first denominator Pochhammers cancel and
    // this is the k-th partial sum of script_i; the k -> infinity limit, not
    // any finite F_k, equals script_i itself.
    Real chi = p.chi().round_to(wd);
    Real term = Real::from_long(1, wd);
    Real sum = term;
    for (long n = 0; n < k; ++n) {
        // ratio of consecutive coefficients
        term *= (-k + n) * chi / ((1 - p.mu() - k + n) * (1 + p.nu() + n) * (n + 1));
        sum += term;
    }
    return sum;
}

Real script_i(const Params& p) {
    long wd = working(p);
    Real chi = p.chi().round_to(wd);
    Real term = Real::from_long(1, wd);
    Real sum = term;
    Real eps = ten_pow(-(wd + 5), wd);
    for (long n = 0; n < 20000; ++n) {
        term *= chi / ((1 + p.nu() + n) * (n + 1));
        sum += term;
        if (abs(term) <= eps * abs(sum) && n > 2) return sum;
    }
    throw ConvergenceError("script_i: series stalled");
}

Real theorem1_term(const Params& p, long k) {
    if (k < 0) throw DomainError("theorem1_term: k must be non-negative");
    long wd = working(p);
    Real omega = p.omega(k).round_to(wd);
    if (omega.is_integer() && omega.to_long() == -1) {
        throw RegimeError("theorem1_term: omega_k = -1 hits the double pole");
    }
    Real t = power_prefactor(p, wd) * pochhammer(p.mu().round_to(wd), k) *
             zeta(-omega) * coeff_F(p, k) /
             (factorial(k, wd) * pow_si(p.a().round_to(wd), 2 * k));
    if (k % 2 != 0) t = -t;
    return t;
}

ExpansionReport theorem1_series(const Params& p, long K) {
    Regime r = classify_regime(p);
    if (r == Regime::DoublePole) {
        throw RegimeError("theorem1_series: g + nu is an odd negative integer; "
                          "use the double-pole series");
    }
    return power_series(p, 0, K, r);
}

ExpansionReport theorem1_series(const Params& p, Optimal) {
    Regime r = classify_regime(p);
    if (r == Regime::DoublePole) {
        throw RegimeError("theorem1_series: g + nu is an odd negative integer; "
                          "use the double-pole series");
    }
    return power_series(p, 0, std::nullopt, r);
}

Real theorem1_alternative_term(const Params& p, long k) {
    if (k < 0) throw DomainError("theorem1_alternative_term: k must be non-negative");
    long wd = working(p);
    Real w = (p.gam() + p.nu()).round_to(wd);
    if (is_even_integer(w)) return Real::zero(wd);

    Real pi = const_pi(wd);
    Real omega = p.omega(k).round_to(wd);
    Real t = power_prefactor(p, wd) * sin(pi * w / 2) /
             (pow(Real::from_long(2, wd), w) * pow(pi, 1 + w));
    t *= pochhammer(p.mu().round_to(wd), k) * gamma(1 + omega) * zeta(1 + omega) *
         coeff_F(p, k) /
         (factorial(k, wd) * pow_si(2 * pi * p.a().round_to(wd), 2 * k));
    return -t;
}

Real residue_s1_kernel(const Params& p) {
    Real w = p.gam() + p.nu();
    if (!(w.is_integer() && w.to_long() == -1)) {
        throw RegimeError("residue_s1: requires g + nu = -1");
    }
    long wd = working(p);
    Real a = p.a().round_to(wd);
    Real nu = p.nu().round_to(wd);
    Real mu = p.mu().round_to(wd);
    Real chi = p.chi().round_to(wd);
    Real euler = const_euler(wd);
    Real scale = a * pow(p.b() / 2, nu) * inv_gamma(1 + nu);

    if (mu.is_integer()) {
        if (mu == 1) {
            // kappa = 1 - euler + psi(2 + nu) - log chi
            Real kap = 1 - euler + digamma(2 + nu) - log(chi);
            // F* = sum_n chi^n / ((2)_n (2+nu)_n) [dpsi(2+n) + dpsi(2+nu+n)],
            // dpsi(alpha + n) = sum_{i<n} 1/(alpha+i)
            Real fstar = Real::zero(wd);
            Real term = Real::from_long(1, wd);
            Real d1 = Real::zero(wd);
            Real d2 = Real::zero(wd);
            Real eps = ten_pow(-(wd + 5), wd);
            for (long n = 0; n < 20000; ++n) {
                if (n > 0) {
                    term *= chi / ((1 + n) * (1 + nu + n));
                    d1 += Real::from_long(1, wd) / (1 + n);
                    d2 += 1 / (1 + nu + n);
                }
                Real t = term * (d1 + d2);
                fstar += t;
                if (n > 3 && abs(t) <= eps * max(abs(fstar), Real::from_long(1, wd))) break;
            }
            Real brace = 2 * log(a) + 2 * euler + kap * (1 - script_i(p)) -
                         chi * fstar / (1 + nu);
            return scale / 2 * brace;
        }
        throw UnimplementedError("residue_s1: integer mu >= 2 not covered by "
                                 "the closed forms");
    }

    Real pi = const_pi(wd);
    Real A = gamma(1 + nu) *
             (chi * gamma(1 - mu) *
                  hyp2f3_reg(Real::from_long(1, wd), Real::from_long(1, wd),
                             Real::from_long(2, wd), 2 - mu, 2 + nu, chi, wd) -
              pi * pow(chi, mu) / sin(pi * mu) *
                  hyp1f2_reg(mu, 1 + mu, 1 + mu + nu, chi, wd));
    Real brace = log(a) + (A + euler - digamma(mu)) / 2;
    return scale * brace;
}

Real residue_s1(const Params& p) {
    long wd = working(p);
    Real e = p.gam() - 2 * p.mu();
    return pow(p.a().round_to(wd), e.round_to(wd)) * residue_s1_kernel(p);
}

ExpansionReport theorem2_series(const Params& p, long K) {
    Real w = p.gam() + p.nu();
    if (!(w.is_integer() && w.to_long() == -1)) {
        throw RegimeError("theorem2_series: requires g + nu = -1");
    }
    return power_series(p, 1, K, Regime::DoublePole);
}

ExpansionReport theorem2_series(const Params& p, Optimal) {
    Real w = p.gam() + p.nu();
    if (!(w.is_integer() && w.to_long() == -1)) {
        throw RegimeError("theorem2_series: requires g + nu = -1");
    }
    return power_series(p, 1, std::nullopt, Regime::DoublePole);
}

Real coeff_C(const Params& p, long m, int j) {
    require_expsmall(p, m, "coeff_C");
    if (j != 1 && j != 2) throw DomainError("coeff_C: j must be 1 or 2");
    return c_impl(p, m, j, working(p));
}

Real coeff_Cprime(const Params& p, long m, int j) {
    require_expsmall(p, m, "coeff_Cprime");
    if (j != 1 && j != 2) throw DomainError("coeff_Cprime: j must be 1 or 2");
    return cprime_impl(p, m, j, working(p));
}

Real coeff_D(const Params& p, long m, int j) {
    require_expsmall(p, m, "coeff_D");
    if (j < 0 || j > 2) throw DomainError("coeff_D: j must be in {0,1,2}");
    return d_impl(p, m, j, working(p));
}

ExpansionReport theorem3_expsmall(const Params& p, int J) {
    if (classify_regime(p) != Regime::ExpSmall) {
        throw RegimeError("theorem3_expsmall: requires g + nu = 2m, m >= 0");
    }
    if (J < 0) throw DomainError("theorem3_expsmall: J must be non-negative");
    if (J > 2) {
        throw UnimplementedError("theorem3_expsmall: only D_0..D_2 are available");
    }
    long m = expsmall_m(p);
    long wd = working(p);
    Real a = p.a().round_to(wd);
    Real mu = p.mu().round_to(wd);
    Real pi = const_pi(wd);
    Real twopia = 2 * pi * a;

    // (-1)^m a^(g - mu) pi^mu I_nu(b)/Gamma(mu) e^(-2 pi a)
    Real lead = pow(a, (p.gam() - p.mu()).round_to(wd)) * pow(pi, mu) *
                bessel_i(p.nu(), p.b().round_to(wd), wd) * inv_gamma(mu) *
                exp(-twopia);
    if (m % 2 != 0) lead = -lead;

    std::vector<Real> terms;
    for (int j = 0; j <= 2; ++j) {
        terms.push_back(lead * d_impl(p, m, j, wd) / pow_si(twopia, j));
    }

    Real value = Real::zero(wd);
    for (int j = 0; j <= J; ++j) value += terms[static_cast<std::size_t>(j)];

    // envelope of the omitted e^(-4 pi a) exponentials
    Real envelope = pow(pi, mu) * inv_gamma(mu) *
                    pow(a, (p.gam() - p.mu()).round_to(wd)) * exp(-2 * twopia) *
                    pow(Real::from_long(2, wd), mu - 1);
    Real err = abs(envelope);
    if (J < 2) err += abs(terms[static_cast<std::size_t>(J + 1)]);

    long k_o = optimal_truncate(terms);
    return ExpansionReport{std::move(value), std::move(terms), 0, J + 1,
                           k_o, std::move(err), Regime::ExpSmall};
}

Real coeff_a_n(const Params& p, long m, const Real& s, long n) {
    if (n < 0) throw DomainError("coeff_a_n: n must be non-negative");
    long wd = std::min(working(p), s.digits());
    Real top = Real::from_long(1, wd);
    Real bot = Real::from_long(1, wd);
    Real base_top = m - s / 2;
    Real base_bot = 1 - p.mu() + m - s / 2;
    for (long i = 0; i < n; ++i) {
        top *= base_top + i;
        bot *= base_bot + i;
    }
    return top / bot;
}

Real exact_F(const Params& p, long m, const Real& s) {
    long wd = std::min(working(p), s.digits());
    Real chi = p.chi().round_to(wd);
    Real base_top = (m - s / 2).round_to(wd);
    Real base_bot = (1 - p.mu() + m - s / 2).round_to(wd);
    Real term = Real::from_long(1, wd);
    Real sum = term;
    Real eps = ten_pow(-(wd + 5), wd);
    int quiet = 0;
    for (long n = 0; n < 10000; ++n) {
        term *= (base_top + n) * chi / ((base_bot + n) * (1 + p.nu() + n) * (n + 1));
        sum += term;
        if (abs(term) <= eps * max(abs(sum), Real::from_long(1, wd))) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("exact_F: series stalled");
}

Real inverse_factorial_F(const Params& p, long m, const Real& s, int J) {
    if (!(s >= Real::from_long(10, 20))) {
        throw DomainError("inverse_factorial_F: s must be >= 10");
    }
    if (J < 0) throw DomainError("inverse_factorial_F: J must be non-negative");
    if (J > 2) {
        throw UnimplementedError("inverse_factorial_F: only C_1', C_2' are available");
    }
    long wd = std::min(working(p), s.digits());
    Real brace = Real::from_long(1, wd);
    if (J >= 1) brace += cprime_impl(p, m, 1, wd) / (s + p.mu() - 1);
    if (J >= 2) {
        brace += cprime_impl(p, m, 2, wd) / ((s + p.mu() - 1) * (s + p.mu() - 2));
    }
    return script_i(p) * brace;
}

long optimal_truncate(const std::vector<Real>& terms) {
    if (terms.empty()) throw DomainError("optimal_truncate: empty term list");
    std::size_t best = 0;
    int grow = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (abs(terms[i]) < abs(terms[best])) {
            best = i;
            grow = 0;
        } else if (++grow >= 2) {
            break;
        }
    }
    return static_cast<long>(best);
}

CoeffSet coeff_set(const Params& p, long k_max) {
    if (k_max < 0) throw DomainError("coeff_set: k_max must be non-negative");
    CoeffSet out{std::vector<Real>{}, script_i(p), {}, {}, {}, {},
                 std::vector<Real>{}, {}, {}, {}};
    for (long k = 0; k <= k_max; ++k) out.F.push_back(coeff_F(p, k));

    long wd = working(p);
    if (classify_regime(p) == Regime::ExpSmall) {
        long m = expsmall_m(p);
        out.C1 = c_impl(p, m, 1, wd);
        out.C2 = c_impl(p, m, 2, wd);
        out.C1p = cprime_impl(p, m, 1, wd);
        out.C2p = cprime_impl(p, m, 2, wd);
        for (int j = 0; j <= 2; ++j) out.D.push_back(d_impl(p, m, j, wd));
    }
    Real w = p.gam() + p.nu();
    if (w.is_integer() && w.to_long() == -1) {
        if (p.mu().is_integer() && p.mu() == 1) {
            Real chi = p.chi().round_to(wd);
            out.kappa = 1 - const_euler(wd) + digamma(2 + p.nu().round_to(wd)) -
                        log(chi);
            // recover F* from the mu = 1 kernel pieces by direct summation
            Real fstar = Real::zero(wd);
            Real term = Real::from_long(1, wd);
            Real d1 = Real::zero(wd);
            Real d2 = Real::zero(wd);
            Real eps = ten_pow(-(wd + 5), wd);
            for (long n = 0; n < 20000; ++n) {
                if (n > 0) {
                    term *= chi / ((1 + n) * (1 + p.nu() + n));
                    d1 += Real::from_long(1, wd) / (1 + n);
                    d2 += 1 / (1 + p.nu() + n);
                }
                Real t = term * (d1 + d2);
                fstar += t;
                if (n > 3 && abs(t) <= eps * max(abs(fstar), Real::from_long(1, wd))) break;
            }
            out.Fstar = fstar;
        } else if (!p.mu().is_integer()) {
            Real chi = p.chi().round_to(wd);
            Real pi = const_pi(wd);
            Real mu = p.mu().round_to(wd);
            Real nu = p.nu().round_to(wd);
            out.A = gamma(1 + nu) *
                    (chi * gamma(1 - mu) *
                         hyp2f3_reg(Real::from_long(1, wd), Real::from_long(1, wd),
                                    Real::from_long(2, wd), 2 - mu, 2 + nu, chi, wd) -
                     pi * pow(chi, mu) / sin(pi * mu) *
                         hyp1f2_reg(mu, 1 + mu, 1 + mu + nu, chi, wd));
        }
    }
    return out;
}

} // namespace mbasym
