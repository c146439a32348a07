#pragma once

#include <string>
#include <vector>

#include "mbasym/params.hpp"

namespace mbasym {

// Outcome of one self-check.  detail carries the measured quantities (and the
// offending inputs on failure) in a stable, printable form.
struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Oracle-route reference quantities used by the table harness and the
// self-check suites.  tol is the absolute tolerance handed to direct_sum.
//
//   reference_s_hat     = -S + a^(g-2mu+1) H(1)
//   reference_s_tilde   =  S - residue_s1                   (g + nu = -1)
//   reference_script_s  =  S - a^(g-2mu+1) H(1)
//                          + a^(-nu-2mu) (b/2)^nu / (2 Gamma(1+nu)) if m = 0
//                                                            (g + nu = 2m)
Real reference_s_hat(const Params& p, const Real& tol);
Real reference_s_tilde(const Params& p, const Real& tol);
Real reference_script_s(const Params& p, const Real& tol);

// Residue of H(s) zeta(s) a^s at the double pole s = 1 (g + nu = -1),
// extracted numerically: the symmetric combination
//   E(h) = (f(1+h) - f(1-h)) h / 2 = Res + O(h^2)
// refined once by Richardson (4 E(h/2) - E(h))/3 = Res + O(h^4), h = 1e-5.
// Independent of the closed forms in residue_s1_kernel.
Real fd_double_pole_residue(const Params& p);

// Value of the J-kernel series at nu = +-1/2 by the trigonometric reduction
//   J_(1/2)(x)  = sqrt(2/(pi x)) sin x,   J_(-1/2)(x) = sqrt(2/(pi x)) cos x:
// sqrt(2a/(pi b)) sum_{n>=1} n^(g-1/2) trig(n b/a) / (n^2 + a^2)^mu summed
// directly with the same tail-bound discipline as the oracle.  use_cos
// selects the nu = -1/2 (cosine) branch.
Real half_order_trig_sum(const Params& p, bool use_cos, const Real& tol);

// Certification of the exponentially small regime against the oracle, on the
// fixed family g = 3.7, nu = -3.7 (g + nu = 0, m = 0), mu = 4, b = 1:
//   rateXY = log|script S(X)| - log|script S(Y)| from oracle values, which
//            should sit within a couple of percent of 2 pi;
//   d1/d2_fit = least-squares-free two-point solve of
//            script S / leading - 1 = D_1 x + D_2 x^2,  x = 1/(2 pi a),
//            from a = 6 and a = 8, to be compared against the closed forms
//            d1/d2_ref.
struct ExpSmallFit {
    Real rate67, rate78, rate89;
    Real d1_fit, d2_fit;
    Real d1_ref, d2_ref;
};

ExpSmallFit expsmall_rate_fit(long digits);

// Self-check suites: "identities", "residues", "coeffs", or "all".
// digits is the certification target (minimum 20); each suite picks its own
// deterministic parameter draws, so output is byte-identical across runs.
std::vector<CheckResult> verify_suite(const std::string& which, long digits);

} // namespace mbasym
