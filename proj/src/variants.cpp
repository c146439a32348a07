#include "mbasym/variants.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbasym/errors.hpp"
#include "mbasym/mellin.hpp"
#include "mbasym/special.hpp"

namespace mbasym {
namespace {

constexpr long GUARD = 10;

long working(const Params& p) { return p.digits() + GUARD; }

// Same generation/truncation discipline as the theorem1/theorem2 engine:
// optimal mode tracks the least |term| and stops after two consecutive
// non-decreasing magnitudes; explicit K generates one spare term for err_est.
template <typename Gen>
ExpansionReport ladder(long wd, std::optional<long> requested_k, Regime regime,
                       Gen gen, const Real& offset) {
    long k_stop = -1;
    if (requested_k) {
        if (*requested_k < 0) {
            throw DomainError("expansion ladder: K must be non-negative");
        }
        if (*requested_k > K_MAX) {
            throw DomainError("expansion ladder: K exceeds K_MAX = " +
                              std::to_string(K_MAX));
        }
        k_stop = *requested_k + 2;
    }

    std::vector<Real> terms;
    std::size_t best = 0;
    int grow = 0;
    for (long k = 0;; ++k) {
        if (requested_k && k >= k_stop) break;
        if (k >= K_MAX + 2) break;
        terms.push_back(gen(k));
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
    }

    long k_o = optimal_truncate(terms);
    long k_used = requested_k ? *requested_k + 1 : k_o;

    Real value = offset.round_to(wd);
    for (long k = 0; k < k_used; ++k) {
        value += terms[static_cast<std::size_t>(k)];
    }
    std::size_t omit = static_cast<std::size_t>(k_used);
    Real err = omit < terms.size() ? abs(terms[omit]) : abs(terms.back());
    if (!requested_k) {
        // The combined ladders here (unlike the plain inverse-power series)
        // routinely develop a shallow same-sign plateau around the least
        // term, where the truncated tail sums to ~sqrt(2 pi k) times the
        // first omitted term rather than ~1 times it.  Under optimal
        // truncation the estimate carries that plateau width; with an
        // alternating-sign tail this is merely conservative.
        err *= 1 + sqrt(Real::from_long(2 * k_used, wd) * const_pi(wd));
    }

    return ExpansionReport{std::move(value), std::move(terms), 0,
                           k_used, k_o, std::move(err), regime};
}

ExpansionReport alternating_impl(const Params& p,
                                 std::optional<long> requested_k) {
    Regime r = classify_regime(p);
    if (r == Regime::DoublePole) {
        throw RegimeError("alternating_expansion: g + nu is an odd negative "
                          "integer; the rescaling identity needs the "
                          "double-pole treatment on both scales");
    }
    long wd = working(p);

    if (r == Regime::ExpSmall) {
        long m = expsmall_m(p);
        ExpansionReport at_half = theorem3_expsmall(p.with_a(p.a() / 2), 2);
        ExpansionReport at_a = theorem3_expsmall(p, 2);
        Real w2 = pow(Real::from_long(2, wd),
                      (p.gam() - 2 * p.mu() + 1).round_to(wd));

        Real corr = Real::zero(wd);
        if (m == 0) {
            // (2^(1+2m) - 1) = 1: the surviving k = 0 ladder term.
            corr = pow(p.a().round_to(wd), (-(p.nu() + 2 * p.mu())).round_to(wd)) *
                   pow(p.b() / 2, p.nu().round_to(wd)) *
                   inv_gamma(1 + p.nu().round_to(wd)) / 2;
        }

        std::vector<Real> terms;
        terms.push_back(corr);
        terms.push_back(-(w2 * at_half.value));
        terms.push_back(at_a.value);
        Real value = terms[0] + terms[1] + terms[2];
        Real err = abs(w2) * at_half.err_est + at_a.err_est;
        long k_o = optimal_truncate(terms);
        return ExpansionReport{std::move(value), std::move(terms), 0, 3,
                               k_o, std::move(err), Regime::ExpSmall};
    }

    return ladder(
        wd, requested_k, r, [&](long k) { return alternating_term(p, k); },
        Real::zero(wd));
}

ExpansionReport y_impl(const Params& p, std::optional<long> requested_k) {
    if (p.nu().is_integer()) {
        throw IntegerNuError("y_series_expansion: the cot/csc split is "
                             "singular at integer nu");
    }
    Params pneg = p.with_negated_nu();
    if (classify_regime(p) == Regime::DoublePole ||
        classify_regime(pneg) == Regime::DoublePole) {
        throw RegimeError("y_series_expansion: a branch has g +- nu an odd "
                          "negative integer (double pole)");
    }
    long wd = working(p);
    Real pi = const_pi(wd);
    Real s = Real::zero(wd);
    Real c = Real::zero(wd);
    sin_cos(s, c, pi * p.nu().round_to(wd));
    Real ct = c / s;
    Real cs = 1 / s;

    Real one = Real::from_long(1, wd);
    Real apow = pow(p.a().round_to(wd), (p.gam() - 2 * p.mu() + 1).round_to(wd));
    Real offset =
        apow * (ct * mellin_h_continued(p, one) - cs * mellin_h_continued(pneg, one));

    return ladder(
        wd, requested_k, classify_regime(p),
        [&](long k) {
            return ct * theorem1_term(p, k) - cs * theorem1_term(pneg, k);
        },
        offset);
}

} // namespace

Real alternating_term(const Params& p, long k) {
    long wd = working(p);
    Real w = p.omega(k).round_to(wd);
    Real factor = 1 - pow(Real::from_long(2, wd), 1 + w);
    return theorem1_term(p, k) * factor;
}

ExpansionReport alternating_expansion(const Params& p, long K) {
    return alternating_impl(p, K);
}

ExpansionReport alternating_expansion(const Params& p, Optimal) {
    return alternating_impl(p, std::nullopt);
}

ExpansionReport y_series_expansion(const Params& p, long K) {
    return y_impl(p, K);
}

ExpansionReport y_series_expansion(const Params& p, Optimal) {
    return y_impl(p, std::nullopt);
}

} // namespace mbasym
