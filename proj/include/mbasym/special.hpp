#pragma once

#include "mbasym/real.hpp"

namespace mbasym {

// All functions here treat their Real arguments as exact inputs and return a
// value whose precision tag equals the number of digits they can certify
// (the `digits` parameter where present, otherwise the argument's precision).

// Gamma function.  PoleError at non-positive integers.
Real gamma(const Real& x);

// Digamma (psi) function.  PoleError at non-positive integers.
Real digamma(const Real& x);

// Riemann zeta.  PoleError within radius 1e-12 of the pole at s = 1.
Real zeta(const Real& s);

// 1/Gamma(x): entire; returns exact 0 at non-positive integers.
Real inv_gamma(const Real& x);

// psi(x)/Gamma(x): entire; at x = -j (j = 0, 1, 2, ...) takes the limit
// value (-1)^(j+1) * j!.
Real psi_over_gamma(const Real& x);

// Pochhammer symbol (x)_n = x (x+1) ... (x+n-1), n >= 0.
Real pochhammer(const Real& x, long n);

// n! as a Real with the given precision.
Real factorial(long n, long digits);

// Bessel function of the first kind, real order nu, x in (0, 1e6].
// Hybrid evaluation: ascending series for moderate x, Hankel-type
// large-argument expansion beyond the crossover.  The result is certified
// to `digits` significant digits relative to the amplitude envelope
// sqrt(2/(pi x)); PrecisionError if that cannot be achieved.
Real bessel_j(const Real& nu, const Real& x, long digits);

// Modified Bessel function of the first kind, real order nu, x > 0.
Real bessel_i(const Real& nu, const Real& x, long digits);

// Regularized hypergeometric 1F2:
//   sum_n (a)_n chi^n / (Gamma(b1+n) Gamma(b2+n) n!)
// Entire in all parameters (lower parameters may be non-positive integers).
Real hyp1f2_reg(const Real& a, const Real& b1, const Real& b2,
                const Real& chi, long digits);

// Regularized hypergeometric 2F3:
//   sum_n (a1)_n (a2)_n chi^n / (Gamma(b1+n) Gamma(b2+n) Gamma(b3+n) n!)
Real hyp2f3_reg(const Real& a1, const Real& a2, const Real& b1,
                const Real& b2, const Real& b3, const Real& chi, long digits);

} // namespace mbasym
