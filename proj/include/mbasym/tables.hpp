#pragma once

#include <string>
#include <vector>

#include "mbasym/params.hpp"

namespace mbasym {

// One table cell: the parameter bundle, the oracle-route reference for the
// regime's canonical combination, the asymptotic value, and the relative
// error between the two.
//
//   which = 1: reference = -S + a^(g-2mu+1) H(1), expansion = minus the
//              inverse-power series, truncated optimally; rel_error is
//              measured against |reference|; k_or_j = last retained k.
//   which = 2: reference = S - residue_s1, expansion = the k >= 1 series;
//              same conventions.
//   which = 3: reference = script S (see verify.hpp), expansion = the
//              exponentially small series truncated at j terms after the
//              leading one; rel_error is measured against |expansion|;
//              k_or_j = j in {0, 1, 2}.
struct TableRow {
    Real a, b, gam, nu, mu;
    std::string regime;
    long k_or_j;
    Real reference;
    Real expansion;
    Real rel_error;
    Real oracle_tol;   // absolute tolerance handed to the oracle
    long oracle_terms; // terms the oracle actually summed
};

struct TableOptions {
    long digits = 0;            // 0 = per-table default (50, 50, 60)
    long oracle_cap = 10000000; // ceiling on oracle terms per cell
    double kappa_safety = 2.0;  // envelope safety factor for the tail bound
};

// Computes the rows of table 1, 2 or 3.  The oracle tolerance per cell is
//   max( min(1e-4 * err_est, 5e-7 * |value|),  4 * tail_bound(cap) ),
// i.e. tight enough that the certified reference does not pollute the first
// four digits of the error column (nor the six digits of the value column),
// but never beyond what oracle_cap terms can certify.
std::vector<TableRow> run_table(int which, const TableOptions& opt = {});

// Plain CSV: one header line, then one line per row; six significant digits
// for values, four for errors.
std::string format_table_csv(const std::vector<TableRow>& rows);

// Markdown table with values in the compact mantissa(exponent) style,
// e.g. 1.08383(-03), six significant digits for values and four for errors.
std::string format_table_markdown(const std::vector<TableRow>& rows);

} // namespace mbasym
