// Module-level invariant tests: special functions, parameter validation, the
// certified direct sum, the Mellin kernel, the asymptotic expansions, the
// alternating/Y variants, and the table formatters.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "mbasym/asymptotics.hpp"
#include "mbasym/errors.hpp"
#include "mbasym/mellin.hpp"
#include "mbasym/oracle.hpp"
#include "mbasym/special.hpp"
#include "mbasym/tables.hpp"
#include "mbasym/variants.hpp"
#include "mbasym/verify.hpp"

using namespace mbasym;

namespace {

long draw_int(std::mt19937_64& g, long lo, long hi) {
    return lo + static_cast<long>(g() % static_cast<unsigned long long>(hi - lo + 1));
}

Real rel_diff(const Real& x, const Real& y) {
    Real denom = max(abs(y), ten_pow(-60, y.digits()));
    return abs(x - y) / denom;
}

} // namespace

TEST_CASE("real: parse, format, mantissa split") {
    Real x = Real::parse("1.08383e-03", 30);
    CHECK(x.str(6) == "1.08383e-03");
    auto [mant, exp] = x.mantissa_exp(6);
    CHECK(mant == "1.08383");
    CHECK(exp == -3);
    CHECK(ten_pow(-3, 30).str(3) == "1.00e-03");
    Real neg = Real::parse("-2.5", 30);
    CHECK(neg.mantissa_exp(3).first == "-2.50");
    CHECK((-neg).to_double() == doctest::Approx(2.5));
}

TEST_CASE("gamma: recurrence gamma(x+1) = x gamma(x)") {
    const long wd = 40;
    const Real tol = ten_pow(3 - wd, wd);
    std::mt19937_64 g(12001);
    for (int i = 0; i < 100; ++i) {
        Real x = Real::from_long(draw_int(g, 1, 10239), wd) / 512; // (0, 20)
        Real lhs = gamma(x + 1);
        Real rhs = x * gamma(x);
        CHECK(rel_diff(lhs, rhs) < tol);
    }
}

TEST_CASE("zeta: functional equation and pole guard") {
    const long wd = 40;
    const Real tol = ten_pow(5 - wd, wd);
    std::mt19937_64 g(12002);
    int done = 0;
    while (done < 50) {
        long k = draw_int(g, 1, 2419);
        Real s = (k <= 1279) ? Real::from_long(-1280 + k, wd) / 128
                             : Real::parse("1.1", wd) + Real::from_long(k - 1280, wd) / 128;
        if (s.is_integer()) continue; // trivial zeros / degenerate sine
        Real lhs = zeta(s);
        Real rhs = pow(Real::from_long(2, wd), s) *
                   pow(const_pi(wd), s - 1) * zeta(1 - s) * gamma(1 - s) *
                   sin(const_pi(wd) * s / 2);
        CHECK(rel_diff(lhs, rhs) < tol);
        ++done;
    }
    CHECK_THROWS_AS(zeta(1 + ten_pow(-13, wd)), PoleError);
    CHECK_THROWS_AS(zeta(Real::from_long(1, wd)), PoleError);
}

TEST_CASE("bessel_j: half-order trigonometric closed forms") {
    const long wd = 40;
    const Real tol = ten_pow(5 - wd, wd);
    Real half = Real::from_long(1, wd) / 2;
    for (const char* xs : {"0.1", "1", "10", "100"}) {
        Real x = Real::parse(xs, wd);
        Real amp = sqrt(2 / (const_pi(wd) * x));
        Real sx = Real::zero(wd);
        Real cx = Real::zero(wd);
        sin_cos(sx, cx, x);
        CHECK(rel_diff(bessel_j(half, x, wd), amp * sx) < tol);
        CHECK(rel_diff(bessel_j(-half, x, wd), amp * cx) < tol);
    }
}

TEST_CASE("bessel_i: negative non-integer order (alternating ascending series)") {
    const long wd = 45;
    // I_nu at nu just below a negative integer has large sign-mixed terms;
    // cross-check through the recurrence I_(nu-1)(x) - I_(nu+1)(x) = 2 nu I_nu(x)/x.
    Real nu = Real::parse("-2.7", wd);
    Real x = Real::parse("1.3", wd);
    Real lhs = bessel_i(nu - 1, x, wd) - bessel_i(nu + 1, x, wd);
    Real rhs = 2 * nu * bessel_i(nu, x, wd) / x;
    CHECK(rel_diff(lhs, rhs) < ten_pow(6 - wd, wd));
}

TEST_CASE("hyp1f2_reg: continuity across a non-positive integer lower parameter") {
    const long wd = 40;
    Real a = Real::parse("0.7", wd);
    Real b2 = Real::parse("1.3", wd);
    Real chi = Real::parse("0.9", wd);
    Real at = hyp1f2_reg(a, Real::from_long(-3, wd), b2, chi, wd);
    Real up = hyp1f2_reg(a, Real::from_long(-3, wd) + ten_pow(-8, wd), b2, chi, wd);
    Real dn = hyp1f2_reg(a, Real::from_long(-3, wd) - ten_pow(-8, wd), b2, chi, wd);
    // The function is analytic in the lower parameter, so the limit from the
    // two sides is their symmetric average (the O(1e-8) linear term cancels);
    // each one-sided value sits within derivative * 1e-8 of the point.
    CHECK(rel_diff((up + dn) / 2, at) < ten_pow(-6, wd));
    CHECK(rel_diff(up, at) < ten_pow(-4, wd));
    CHECK(rel_diff(dn, at) < ten_pow(-4, wd));
}

TEST_CASE("pochhammer: running product semantics at negative arguments") {
    const long wd = 30;
    CHECK(pochhammer(Real::from_long(-3, wd), 4).is_zero());
    CHECK(pochhammer(Real::from_long(-3, wd), 3).to_long() == -6);
    Real x = Real::parse("2.5", wd);
    CHECK(rel_diff(pochhammer(x, 3), Real::parse("39.375", wd)) <
          ten_pow(5 - wd, wd));
    CHECK(pochhammer(x, 0).to_long() == 1);
}

TEST_CASE("params: domain validation") {
    const long wd = 30;
    auto mk = [&](const char* a, const char* b, const char* g, const char* nu,
                  const char* mu) { return Params::parse(a, b, g, nu, mu, wd); };
    CHECK_THROWS_AS(mk("0", "1", "0", "0", "2"), DomainError);
    CHECK_THROWS_AS(mk("2", "-1", "0", "0", "2"), DomainError);
    CHECK_THROWS_AS(mk("2", "1", "0", "0", "0"), DomainError);
    CHECK_THROWS_AS(mk("2", "1", "4", "0", "2"), DomainError); // 2mu-g = 0
    Params p = mk("2", "1", "0.5", "0.25", "3");
    CHECK(p.delta().to_double() == doctest::Approx(6.0));
    CHECK(p.chi().to_double() == doctest::Approx(0.25)); // b^2/4
}

TEST_CASE("oracle: self-consistency between tol and tol/100") {
    const long wd = 30;
    Params p = Params::parse("5", "1", "0.5", "0.4", "3.2", wd);
    Real tol = ten_pow(-12, wd);
    OracleResult coarse = direct_sum(p, SeriesKind::JSeries, tol);
    OracleResult fine = direct_sum(p, SeriesKind::JSeries, tol / 100);
    CHECK(abs(coarse.value - fine.value) < 2 * tol);
    CHECK(coarse.tail < tol);
    CHECK(fine.n_terms > coarse.n_terms);
}

TEST_CASE("oracle: tail bound domain and monotonicity") {
    const long wd = 30;
    Params p = Params::parse("5", "1", "0.5", "0.4", "3.2", wd);
    CHECK_THROWS_AS(tail_bound(p, SeriesKind::JSeries, 4), DomainError); // n b/a < 1
    Real t1 = tail_bound(p, SeriesKind::JSeries, 100);
    Real t2 = tail_bound(p, SeriesKind::JSeries, 200);
    CHECK(t2 < t1);
}

TEST_CASE("oracle: Y kernel rejects integer order") {
    const long wd = 30;
    Params p = Params::parse("5", "1", "0.5", "1", "3.2", wd);
    CHECK_THROWS_AS(direct_sum(p, SeriesKind::YSeries, ten_pow(-10, wd)),
                    IntegerNuError);
    CHECK_THROWS_AS(tail_bound(p, SeriesKind::YSeries, 100), IntegerNuError);
}

TEST_CASE("mellin: strip enforcement and pole flagging") {
    const long wd = 40;
    Params p = Params::parse("3", "1", "0.5", "0.25", "3", wd);
    // strip: -g - nu = -0.75 < s < delta = 6
    CHECK(abs(mellin_h(p, Real::parse("-0.74", wd))) > Real::zero(wd));
    CHECK(abs(mellin_h(p, Real::parse("5.99", wd))) > Real::zero(wd));
    CHECK_THROWS_AS(mellin_h(p, Real::parse("-0.76", wd)), StripError);
    CHECK_THROWS_AS(mellin_h(p, Real::from_long(6, wd)), StripError);
    CHECK_THROWS_AS(mellin_h_continued(p, -p.gam() - p.nu()), PoleError);
    // continuation agrees with the direct strip evaluation inside the strip
    Real s = Real::parse("1.5", wd);
    CHECK(rel_diff(mellin_h_continued(p, s), mellin_h(p, s)) < ten_pow(10 - wd, wd));
}

TEST_CASE("mellin: removable points snap to the regularized form") {
    const long wd = 40;
    Params p = Params::parse("3", "1", "0.5", "0.25", "3", wd);
    // mu - lambda = 1  <=>  s = 2(mu - 1) - g - nu
    Real s = 2 * (p.mu() - 1) - p.gam() - p.nu();
    CHECK(abs(mellin_q(p, s)) < ten_pow(10 - wd, wd));
    CHECK(abs(mellin_q_raw(p, s)) < ten_pow(10 - wd, wd));
    // Richardson limit of H from h = +-1e-3, +-5e-4 matches H at the point.
    Real h = ten_pow(-3, wd);
    Real avg_h = (mellin_h(p, s + h) + mellin_h(p, s - h)) / 2;
    Real avg_h2 = (mellin_h(p, s + h / 2) + mellin_h(p, s - h / 2)) / 2;
    Real richardson = (4 * avg_h2 - avg_h) / 3;
    CHECK(rel_diff(richardson, mellin_h(p, s)) < ten_pow(-6, wd));
}

TEST_CASE("asymptotics: termwise functional-equation identity") {
    const long wd = 50;
    Params p = Params::parse("5", "1.5", "0.6", "0.7", "2.8", wd);
    for (long k = 0; k <= 8; ++k) {
        Real t = theorem1_term(p, k);
        Real alt = theorem1_alternative_term(p, k);
        CHECK(rel_diff(t, alt) < ten_pow(5 - wd, wd));
    }
}

TEST_CASE("asymptotics: degenerate inverse-power terms when g + nu = 2m") {
    const long wd = 40;
    Real nu = Real::parse("0.3125", wd);
    // m = 0: only the k = 0 term survives and equals -a^(-nu-2mu)(b/2)^nu/(2 Gamma(1+nu))
    Params p0(Real::from_long(4, wd), Real::from_long(1, wd), -nu, nu,
              Real::parse("2.5", wd));
    ExpansionReport r0 = theorem1_series(p0, 6L);
    Real expect = -pow(p0.a(), -(nu + 2 * p0.mu())) * pow(p0.b() / 2, nu) *
                  inv_gamma(1 + nu) / 2;
    CHECK(rel_diff(r0.terms[0], expect) < ten_pow(8 - wd, wd));
    for (size_t i = 1; i < r0.terms.size(); ++i) CHECK(r0.terms[i].is_zero());
    // m = 1: every term vanishes
    Params p1(Real::from_long(4, wd), Real::from_long(1, wd), 2 - nu, nu,
              Real::parse("2.5", wd));
    ExpansionReport r1 = theorem1_series(p1, 6L);
    for (const Real& t : r1.terms) CHECK(t.is_zero());
}

TEST_CASE("asymptotics: optimal truncation semantics") {
    const long wd = 45;
    Params p = Params::parse("6", "1", "0.5", "0.333333333333333333333333333333",
                             "3", wd);
    ExpansionReport rep = theorem1_series(p, Optimal{});
    CHECK(rep.k_used == rep.k_o);
    CHECK(rel_diff(rep.err_est, abs(rep.term(rep.k_o))) < ten_pow(20 - wd, wd));
    Real partial = Real::zero(wd);
    for (long k = rep.k_first; k < rep.k_used; ++k) partial += rep.term(k);
    CHECK(rel_diff(rep.value, partial) < ten_pow(25 - wd, wd));
    ExpansionReport fixed = theorem1_series(p, 5L);
    CHECK(fixed.k_used == 6); // K = 5 retains k = 0..5; first omitted is k = 6
    CHECK(rel_diff(fixed.err_est, abs(fixed.term(6))) < ten_pow(20 - wd, wd));
}

TEST_CASE("asymptotics: closed-form residue matches the finite-difference oracle") {
    const long wd = 30;
    Real nu = Real::from_long(40, wd) / 128;
    Params p(Real::parse("4.5", wd), Real::parse("1.75", wd), -1 - nu, nu,
             Real::parse("2.35", wd));
    Real closed = residue_s1_kernel(p);
    Real fd = fd_double_pole_residue(p);
    CHECK(rel_diff(closed, fd) < ten_pow(-8, wd));
}

TEST_CASE("asymptotics: F-coefficient closed forms") {
    const long wd = 40;
    Params p = Params::parse("5", "1.7", "0.25", "0.3", "2.2", wd);
    Real chi = p.chi();
    CHECK(coeff_F(p, 0).to_long() == 1);
    Real f1 = 1 + chi / (p.mu() * (1 + p.nu()));
    CHECK(rel_diff(coeff_F(p, 1), f1) < ten_pow(10 - wd, wd));
    // mu = 1: F_k is the k-th partial sum of script I
    Params q = Params::parse("5", "1.7", "0.25", "0.3", "1", wd);
    Real partial = Real::from_long(1, wd);
    Real term = Real::from_long(1, wd);
    for (long n = 1; n <= 3; ++n) {
        term *= q.chi() / ((q.nu() + n) * n);
        partial += term;
    }
    CHECK(rel_diff(coeff_F(q, 3), partial) < ten_pow(10 - wd, wd));
}

TEST_CASE("variants: alternating ladder carries the {1 - 2^(1+omega_k)} factor") {
    const long wd = 45;
    Params p = Params::parse("5", "2", "0.3", "0.2", "3", wd);
    ExpansionReport rep = alternating_expansion(p, 6L);
    for (long k = 0; k <= 6; ++k) {
        Real omega = p.gam() + p.nu() + 2 * k;
        Real expect = theorem1_term(p, k) *
                      (1 - pow(Real::from_long(2, wd), 1 + omega));
        CHECK(rel_diff(rep.term(k), expect) < ten_pow(5 - wd, wd));
    }
}

TEST_CASE("variants: alternating expansion matches the alternating oracle") {
    const long wd = 40;
    Params p = Params::parse("5", "2", "0.3", "0.2", "3", wd);
    Real tol = ten_pow(-16, wd);
    OracleResult orr = direct_sum(p, SeriesKind::AlternatingJ, tol);
    ExpansionReport rep = alternating_expansion(p, Optimal{});
    // The H(1) leading parts of S(a) and 2^(g-2mu+1) S(a/2) cancel exactly,
    // so the ladder approximates the alternating series itself.
    Real dev = abs(orr.value - rep.value);
    CHECK(dev < 3 * rep.err_est + 5 * tol);
    // Optimal truncation inflates err_est by the same-sign plateau width.
    CHECK(rep.err_est > abs(rep.term(rep.k_o)));
}

TEST_CASE("variants: Y ladder at nu = 1/2 reduces to the negated -1/2 ladder") {
    const long wd = 45;
    Real half = Real::from_long(1, wd) / 2;
    Params p(Real::from_long(6, wd), Real::from_long(1, wd),
             Real::parse("0.25", wd), half, Real::parse("2.5", wd));
    Params pm(Real::from_long(6, wd), Real::from_long(1, wd),
              Real::parse("0.25", wd), -half, Real::parse("2.5", wd));
    ExpansionReport y = y_series_expansion(p, 6L);
    for (long k = 0; k <= 6; ++k) {
        CHECK(rel_diff(y.term(k), -theorem1_term(pm, k)) < ten_pow(-40, wd));
    }
}

TEST_CASE("tables: row formatters") {
    const long wd = 30;
    TableRow row{Real::from_long(2, wd),
                 Real::parse("0.5", wd),
                 Real::parse("0.5", wd),
                 Real::parse("0.333333", wd),
                 Real::from_long(3, wd),
                 "Generic",
                 4,
                 Real::parse("1.08383e-03", wd),
                 Real::parse("1.08585e-03", wd),
                 Real::parse("1.867e-03", wd),
                 Real::parse("1.4e-22", wd),
                 12345};
    std::string csv = format_table_csv({row});
    CHECK(csv.find("a,b,gamma,nu,mu,regime,k,reference,expansion,rel_error,"
                   "oracle_tol,oracle_terms\n") == 0);
    CHECK(csv.find("1.08383e-03") != std::string::npos);
    CHECK(csv.find(",12345\n") != std::string::npos);
    std::string md = format_table_markdown({row});
    CHECK(md.find("1.08383(-03)") != std::string::npos);
    CHECK(md.find("1.867(-03)") != std::string::npos);
    CHECK(md.find("| 4 |") != std::string::npos);
}
