#pragma once

#include "mbasym/params.hpp"

namespace mbasym {

struct OracleOptions {
    long cap = 10000000; // hard ceiling on the number of summed terms
    double kappa = 2.0;  // safety factor on the amplitude envelope
    int threads = 0;     // worker threads for the bulk region; 0 = hardware
};

struct OracleResult {
    Real value; // partial sum; |S - value| <= tol (truncation + rounding)
    long n_terms;
    Real tail; // certified bound on the neglected tail at n_terms
};

// Certified bound on |sum_{n > N} term_n|: each kernel is bounded by kappa
// times the amplitude envelope sqrt(2 a / (pi n b)), so the tail is below
//   kappa * M * sqrt(2a/(pi b)) * N^(1-delta) / (delta - 1),
// M = 1 for the J kernels and |cot(pi nu)| + |csc(pi nu)| for Y.
// DomainError if N b / a < 1 (the envelope is only claimed from there on).
Real tail_bound(const Params& p, SeriesKind kind, long n, double kappa = 2.0);

// Direct summation of the series to absolute accuracy tol.  Deterministic:
// the result is bit-identical across runs and thread counts.
// ConvergenceError if the required number of terms exceeds opt.cap;
// IntegerNuError for the Y kernel at integer nu.
OracleResult direct_sum(const Params& p, SeriesKind kind, const Real& tol,
                        const OracleOptions& opt = {});

} // namespace mbasym
