#pragma once

#include <string>

#include "mbasym/real.hpp"

namespace mbasym {

// Which kernel sits inside the lattice sum.
enum class SeriesKind {
    JSeries,      // J_nu(n b / a)
    AlternatingJ, // (-1)^(n-1) J_nu(n b / a)
    YSeries,      // Y_nu(n b / a)
};

const char* to_string(SeriesKind kind);

// Validated parameter bundle for
//   S(a) = sum_{n>=1} n^g K_nu(n b / a) / (n^2 + a^2)^mu,
// K the kernel selected by SeriesKind.  Requires a > 0, b > 0, mu > 0 and
// 2 mu - g > 1/2 (absolute convergence of the tail).
class Params {
public:
    Params(Real a, Real b, Real g, Real nu, Real mu);

    static Params parse(const std::string& a, const std::string& b,
                        const std::string& g, const std::string& nu,
                        const std::string& mu, long digits);

    const Real& a() const { return a_; }
    const Real& b() const { return b_; }
    const Real& gam() const { return g_; }
    const Real& nu() const { return nu_; }
    const Real& mu() const { return mu_; }

    // Minimum precision across the five fields.
    long digits() const;

    // chi = b^2 / 4
    Real chi() const;

    // B = (b/2)^nu / (2 Gamma(mu))
    Real coeff_b() const;

    // delta = 2 mu - g + 1/2: the tail of the sum decays like n^(-delta).
    Real delta() const;

    // lambda(s) = (s + g + nu) / 2
    Real lambda(const Real& s) const;

    // omega_k = g + nu + 2k
    Real omega(long k) const;

    // Same parameters with a replaced (used by the alternating identity).
    Params with_a(const Real& new_a) const;

    // Same parameters with nu negated (used by the Y-kernel split).
    Params with_negated_nu() const;

private:
    Real a_, b_, g_, nu_, mu_;
};

} // namespace mbasym
