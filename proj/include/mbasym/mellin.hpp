#pragma once

#include "mbasym/params.hpp"

namespace mbasym {

// Mellin transform of the summand profile h(x) = x^g J_nu(b x) (x^2+1)^(-mu):
//
//   H(s) = integral_0^inf x^(s-1) h(x) dx
//        = pi B / sin(pi (mu - lambda)) * [T1(lambda) - T2(lambda)],
//
// lambda = (s + g + nu)/2, B = (b/2)^nu / (2 Gamma(mu)),
//   T1 = Gamma(lambda)        * 1F2-reg(lambda; 1+lambda-mu, 1+nu;           chi)
//   T2 = chi^(mu-lambda) Gamma(mu) * 1F2-reg(mu; 1-lambda+mu, 1-lambda+mu+nu; chi).
//
// The integral converges on the open strip -g-nu < s < delta; the closed form
// continues H meromorphically with simple poles exactly at lambda = -k
// (s = -g - nu - 2k), k = 0, 1, 2, ...  The zeros of sin(pi(mu-lambda)) are
// removable: T1 - T2 vanishes there, and within distance SNAP_EPS of an
// integer mu-lambda the evaluation switches to the limiting (regularized)
// form, which is exact at the integer.
inline constexpr double SNAP_EPS = 1e-6;

// The bracket Q = T1 - T2 (no prefactor).  Within SNAP_EPS of an integer
// mu - lambda the two series rearrange into one another term by term, so the
// bracket is returned in its collapsed (exactly zero) form.
Real mellin_q(const Params& p, const Real& s);

// The same bracket evaluated naively, with no snapping: at integer mu - lambda
// this exposes the raw cancellation residue, of the order of an ulp of
// max(|T1|, |T2|).  Diagnostic companion to mellin_q.
Real mellin_q_raw(const Params& p, const Real& s);

// H(s) restricted to the strip of absolute convergence.
// StripError outside the open strip; PoleError exactly on a pole.
Real mellin_h(const Params& p, const Real& s);

// Meromorphic continuation of H: any real s, PoleError exactly at
// s = -g - nu - 2k (and, for integer mu, wherever the snapped form lands on
// the induced pole lattice).
Real mellin_h_continued(const Params& p, const Real& s);

} // namespace mbasym
