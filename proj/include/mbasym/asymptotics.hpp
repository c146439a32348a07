#pragma once

#include <optional>
#include <vector>

#include "mbasym/params.hpp"

namespace mbasym {

// Large-a behaviour of S = sum_n n^g J_nu(n b / a) (n^2 + a^2)^(-mu) falls
// into three regimes, classified by w = g + nu:
//
//   Generic:    w not an odd negative integer and not a non-negative even
//               integer.  S - a^(g-2mu+1) H(1) has a full power series in
//               a^(-2) (the "theorem1" series below).
//   DoublePole: w in {-1, -3, ...}.  The Mellin integrand acquires a double
//               pole at s = 1; only w = -1 carries a closed-form residue.
//   ExpSmall:   w in {0, 2, 4, ...}.  Every power-series coefficient
//               vanishes and the remainder is exponentially small, of size
//               a^(g-mu) e^(-2 pi a) ("theorem3" series).
enum class Regime { Generic, DoublePole, ExpSmall };

const char* to_string(Regime r);

Regime classify_regime(const Params& p);

// m = (g + nu) / 2 for the ExpSmall regime; RegimeError otherwise.
long expsmall_m(const Params& p);

// Hard cap on the number of generated expansion terms.  The optimal
// truncation index stays well below this for every tabulated case.
inline constexpr long K_MAX = 64;

// Tag type requesting optimal truncation (stop just before the least term).
struct Optimal {};

// One asymptotic-series evaluation.  terms[i] is the signed term of absolute
// index k = k_first + i; the double-pole series starts at k_first = 1, all
// others at 0.  value sums the terms with k < k_used.  k_o is the argmin of
// |term| over the generated window; under Optimal truncation k_used == k_o,
// so the least term is the first one omitted and err_est = |term(k_o)|.
// In the ExpSmall regime err_est additionally carries the e^(-4 pi a)
// envelope of the never-summed higher exponentials.
struct ExpansionReport {
    Real value;
    std::vector<Real> terms;
    long k_first;
    long k_used;
    long k_o;
    Real err_est;
    Regime regime;

    const Real& term(long k) const;
};

// F_k := 1F2(-k; 1 - mu - k, 1 + nu; chi), a degree-k polynomial in chi
// evaluated as a finite sum (the denominators never vanish for mu > 0).
// F_0 = 1.  At mu = 1 the Pochhammer ratios cancel termwise and F_k equals
// the k-th partial sum of script_i(p); F_k -> script_i(p) only as k grows.
Real coeff_F(const Params& p, long k);

// script I_nu(b) = Gamma(1+nu) (b/2)^(-nu) I_nu(b) = sum_n chi^n/((1+nu)_n n!).
Real script_i(const Params& p);

// k-th term of the inverse-power series:
//   (-1)^k/k! (mu)_k zeta(-omega_k) F_k a^(-2k) * a^(-nu-2mu) (b/2)^nu / Gamma(1+nu),
// omega_k = g + nu + 2k.  Requires omega_k != -1 (RegimeError at the double
// pole).  S ~ a^(g-2mu+1) H(1) + sum_k of these.
Real theorem1_term(const Params& p, long k);

// Inverse-power expansion; RegimeError when g + nu in {-1, -3, ...}.  In the
// ExpSmall regime the terms degenerate (all zero for m >= 1; only k = 0
// survives for m = 0) and the report is flagged accordingly.
ExpansionReport theorem1_series(const Params& p, long K);
ExpansionReport theorem1_series(const Params& p, Optimal);

// Functional-equation rewrite of theorem1_term:
//   -(b/2)^nu sin(pi w / 2) / (2^w pi^(1+w) Gamma(1+nu)) * a^(-nu-2mu)
//     * (mu)_k/k! Gamma(1+omega_k) zeta(1+omega_k) F_k (2 pi a)^(-2k),
// w = g + nu.  Identically zero for even integer w.  Equal to
// theorem1_term(p, k) in exact arithmetic.
Real theorem1_alternative_term(const Params& p, long k);

// Residue of the Mellin integrand at its double pole s = 1 (g + nu = -1):
// residue_s1_kernel = Res_{s=1} H(s) zeta(s) a^s, in closed form
// (non-integer mu, and the mu = 1 limit; UnimplementedError for integer
// mu >= 2).  residue_s1 scales it by a^(g-2mu), giving the contribution to
// S itself: S - residue_s1 ~ sum_{k>=1} theorem1_term(p, k).
Real residue_s1(const Params& p);
Real residue_s1_kernel(const Params& p);

// Double-pole expansion (g + nu = -1): the same term generator from k = 1,
// approximating S - residue_s1.  RegimeError unless g + nu = -1.
ExpansionReport theorem2_series(const Params& p, long K);
ExpansionReport theorem2_series(const Params& p, Optimal);

// Exponentially-small-regime coefficients (g + nu = 2m):
//   C_1  = (1-mu)(4m - mu)/2
//   C_2  = (1-mu)(2-mu) {16 m^2 + (1+mu)(mu - 8m)} / 8
//   C_1' = (1-mu) b I_{nu+1}(b)/I_nu(b)
//   C_2' = (1-mu) b {(2m+1-mu) I_{nu+1}(b)/I_nu(b) + (2-mu)(b/2) I_{nu+2}(b)/I_nu(b)}
//   D_0 = 1, D_1 = C_1 + C_1', D_2 = C_2 + C_2' + C_1 C_1'.
// j ranges over {1,2} for C and C', {0,1,2} for D.
Real coeff_C(const Params& p, long m, int j);
Real coeff_Cprime(const Params& p, long m, int j);
Real coeff_D(const Params& p, long m, int j);

// Exponentially small expansion (g + nu = 2m, J <= 2):
//   script S := S - a^(g-2mu+1) H(1) + delta_{m,0} a^(-nu-2mu) (b/2)^nu / (2 Gamma(1+nu))
//            ~ (-1)^m a^(g-mu) pi^mu I_nu(b)/Gamma(mu) e^(-2 pi a)
//              * sum_{j=0}^{J} D_j (2 pi a)^(-j).
// err_est adds the e^(-4 pi a) envelope pi^mu/Gamma(mu) a^(g-mu) e^(-4 pi a) 2^(mu-1).
ExpansionReport theorem3_expsmall(const Params& p, int J);

// a_n(s) = (m - s/2)_n / (1 - mu + m - s/2)_n, the exact coefficient of
// chi^n/((1+nu)_n n!) in F(s) = 1F2(m - s/2; 1 - mu + m - s/2, 1 + nu; chi).
Real coeff_a_n(const Params& p, long m, const Real& s, long n);

// F(s) summed exactly from its defining series.
Real exact_F(const Params& p, long m, const Real& s);

// Inverse-factorial approximation of F(s) for large s:
//   script_i(p) * {1 + C_1'/(s+mu-1) + C_2'/((s+mu-1)(s+mu-2))}, truncated at J.
// DomainError for s < 10; UnimplementedError for J > 2.
Real inverse_factorial_F(const Params& p, long m, const Real& s, int J);

// Index of the least |term|, scanning until the magnitudes grow for two
// consecutive indices or the list ends.
long optimal_truncate(const std::vector<Real>& terms);

// Convenience aggregate of every closed-form coefficient the expansions use;
// regime-dependent members are absent when undefined for the parameters.
struct CoeffSet {
    std::vector<Real> F;           // F_0 .. F_kmax
    Real script_i_nu;              // script I_nu(b)
    std::optional<Real> C1, C2;    // ExpSmall regime
    std::optional<Real> C1p, C2p;  // ExpSmall regime
    std::vector<Real> D;           // D_0..D_2 (ExpSmall regime, else empty)
    std::optional<Real> A;         // double-pole residue, non-integer mu
    std::optional<Real> Fstar;     // double-pole residue, mu = 1
    std::optional<Real> kappa;     // double-pole residue, mu = 1
};

CoeffSet coeff_set(const Params& p, long k_max);

} // namespace mbasym
