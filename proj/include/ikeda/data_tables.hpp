#pragma once

#include <string>
#include <vector>

namespace ikeda::data {

/**
 * A formula transcribed from the source tables.  `printed` is the source
 * text kept verbatim (TeX-ish, including any typos); `machine` is the
 * same formula in the expression language of parse_expression.  When the
 * printed text is ambiguous (unbalanced brackets), `flag` names the
 * problem and `machine` holds the documented best-effort reading.
 */
struct FormulaRecord {
    std::string name;
    std::string printed;
    std::string machine;
    std::string flag;  // empty when the transcription is faithful as-is
};

// The four Hecke eigenvalues of a genus-4 lift: T(p) and the three
// T_i(p^2), as polynomials in a, 1/a and half-integer powers of p.
const std::vector<FormulaRecord>& eigenvalue_formulas();

/**
 * One row of the degree-16 partial-fraction table.  The source writes
 * each term as value/(-b + c*p^(2k-1)*x)^order; rows store b and c as
 * printed plus the c actually used (they differ only for the one row
 * whose printed pole is inconsistent with the series expansion given
 * alongside it; see its flag).  The row value is numerator divided by
 * the product of the denominator factors.  Rows 1 and 2 share the
 * double pole at b = c = 1 with orders 2 and 1.
 */
struct ResidueRow {
    std::string label;            // table position, a1..a16
    std::string pole_b;
    std::string pole_c;
    std::string pole_c_used;
    int order;
    std::string numerator;        // monomial expression, sign included
    std::vector<std::string> denominator;
    std::string flag;             // transcription caveats, empty if none
};
const std::vector<ResidueRow>& residue_table();

// The same table rendered in the documented JSON schema (stable order).
std::string residue_table_json();

// Numerator coefficient data for the degree-16 series: sparse list of
// (power of x, expression in the Hecke symbols).  Loaded lazily from an
// optional JSON side file; empty when the file is absent.
struct NumeratorData {
    bool loaded = false;
    std::string source;
    std::vector<std::pair<int, std::string>> coeffs;
};

}  // namespace ikeda::data
