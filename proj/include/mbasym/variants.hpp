#pragma once

#include "mbasym/asymptotics.hpp"

namespace mbasym {

// k-th term of the inverse-power expansion of the alternating series
//   S_alt(a) = sum_{n>=1} (-1)^(n-1) n^g J_nu(n b / a) / (n^2 + a^2)^mu:
// the theorem1 term dressed with the factor {1 - 2^(1+omega_k)}.  That is
// what the rescaling identity S_alt(a) = S(a) - 2^(g-2mu+1) S(a/2) does to
// the inverse-power ladder, the a^(g-2mu+1) H(1) offsets cancelling exactly:
//   2^(g-2mu+1) t_k(a/2) = 2^(1+omega_k) t_k(a).
// RegimeError at the double pole (through theorem1_term).
Real alternating_term(const Params& p, long k);

// Expansion of S_alt itself; no H(1) offset remains after the identity, so
// value approximates the alternating sum directly.
//
// Generic regime: the ladder of alternating_term with the usual optimal /
// explicit-K truncation semantics.  Because the {1 - 2^(1+omega_k)} dressing
// tends to produce a shallow same-sign plateau around the least term, the
// optimal-truncation err_est here is |first omitted| * (1 + sqrt(2 pi k)),
// the same-sign-tail plateau width; under explicit K it is the plain first
// omitted term.  (The same rule applies to y_series_expansion below.)  Exponentially small regime (g + nu = 2m):
// the ladder degenerates (zeta kills every k >= 1 term), so the report is
// assembled from the identity route instead, with three components
//   terms[0] = (2^(1+2m) - 1) * a^(-nu-2mu) (b/2)^nu / (2 Gamma(1+nu))
//              (zero unless m = 0; equals the surviving k = 0 ladder term),
//   terms[1] = -2^(g-2mu+1) * theorem3_expsmall(a/2, J=2).value   (dominant),
//   terms[2] = +theorem3_expsmall(a, J=2).value,
// k_used = 3, err_est the weighted sum of the two theorem3 error estimates;
// the K / Optimal argument is immaterial there.
// Errors: RegimeError in the double-pole regime (g + nu an odd negative
// integer), where S(a) and S(a/2) each need the theorem2 treatment.
ExpansionReport alternating_expansion(const Params& p, long K);
ExpansionReport alternating_expansion(const Params& p, Optimal);

// Expansion of the Y-kernel series sum_{n>=1} n^g Y_nu(n b/a)/(n^2+a^2)^mu
// through the kernel split
//   Y_nu = cot(pi nu) J_nu - csc(pi nu) J_(-nu),
// i.e. cot(pi nu) S_(+nu) - csc(pi nu) S_(-nu) with each branch carried by
// its theorem1 structure a^(g-2mu+1) H_(+-nu)(1) + ladder.  The report's
// terms are the combined ladder terms
//   u_k = cot(pi nu) t_k^(+nu) - csc(pi nu) t_k^(-nu),
// truncated optimally (or at K); the two H(1) pieces are folded into value.
// The regime field reports the +nu branch's classification.
// Errors: IntegerNuError for integer nu (the split is singular there);
// RegimeError if either branch sits in the double-pole regime.
ExpansionReport y_series_expansion(const Params& p, long K);
ExpansionReport y_series_expansion(const Params& p, Optimal);

} // namespace mbasym
