#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ikeda/data_tables.hpp"
#include "ikeda/eval.hpp"
#include "ikeda/lfactor.hpp"
#include "ikeda/residue.hpp"

namespace ikeda::series {

using exact::EvalPoint;
using exact::GaussRat;
using exact::KExp;
using exact::QiSqrtP;
using exact::QSqrtP;
using exact::Sign;

/**
 * Exact value of the k-free part of g(r), the x^r coefficient of 1/Q,
 * read off the decomposition: sum over terms of coeff * rho^r, the
 * order-2 term weighted by (r+1).  The classical scale restores
 * p^{(2k-1)r}.  The point must carry a Gaussian-unit a; a
 * specialization that zeroes one of the residue denominators (two
 * poles colliding) raises DegenerateSatake.
 */
QiSqrtP g_value(const PartialFractions& pf, long r, const EvalPoint& pt);

// Same coefficient by plain power-series division of 1/Q, evaluated at
// the point: the route the residue form is tested against.
QiSqrtP g_series_value(const PartialFractions& pf, long r, const EvalPoint& pt);

/** Numerator coefficients e_i of the rational generating function. */
struct NumeratorData {
    int genus = 0;
    std::vector<LaurentAQ> e;
    std::string provenance;
};

// The degree-four numerator in its two printed variants, weight kept
// symbolic; e entries contain the lambda placeholders.
NumeratorData genus2_numerator(lfactor::Genus2Numerator variant);

// JSON loader for external numerator data:
// { "genus": 4, "provenance": "...",
//   "e": [ { "xpow": i, "terms": [ {"a_exp": .., "q_base": ..,
//            "q_kmult": .., "num": "...", "den": "..."} ] } ] }
// with num/den decimal strings.  Validates e_0 = 1.
NumeratorData load_numerator_json(const std::string& text);
// Reads the file if it exists; nullopt (not an error) when absent.
std::optional<NumeratorData> load_numerator_file(const std::string& path);

/**
 * lambda(p^r) as an exact Laurent expression, by series division of
 * P/Q at the classical scale.  Genus 2 uses the degree-four local
 * factor written in the lambda placeholders; genus 4 uses the
 * degree-16 spin denominator.  Requires e_0 = 1; r = 0 gives 1.
 */
LaurentAQ lambda_pr(const NumeratorData& nd, long r);

// Same value assembled term by term as sum_i e_i c_{r-i} with the c_j
// obtained from 1/Q alone; an independent code path kept for
// cross-checking the division route.
LaurentAQ lambda_pr_convolution(const NumeratorData& nd, long r);

// The denominator polynomial lambda_pr uses for the given genus.
PolyX genus_Q(int genus);

/** Per-row outcome of checking the bundled residue table. */
struct RowReport {
    std::string label;
    std::string method;  // "symbolic" or "numeric"
    bool pole_corrected = false;
    bool match = false;
    std::string note;
};

struct AppendixReport {
    std::vector<RowReport> rows;
    bool structure_second_is_minus7_first = false;  // shared denominator, factor -7
    bool reconstruction_ok = false;  // sum of transcribed terms == 1/Q at the sample points
    int points_used = 0;
    bool all_match() const;
};

/**
 * Checks every transcribed coefficient against the independently
 * computed partial fractions of 1/Q.  All rows are compared
 * symbolically by cross-multiplication except the one flagged
 * "compared numerically", which is evaluated at five exact
 * rational-circle points (relative error 0 by construction).  Also
 * verifies the -7 structural relation between the first two rows and
 * reconstructs 1/Q from the transcribed terms at sample points.
 */
AppendixReport verify_appendix(const std::vector<data::ResidueRow>& rows);

// Parses the JSON emitted by data::residue_table_json().
std::vector<data::ResidueRow> residue_rows_from_json(const std::string& text);

/** One factor of the positive product D(r) clearing the lambda(p^r)
 * denominator: p^m + s*(a^j + a^-j)*p^(m/2) + 1, or a pure-p factor
 * when j = 0. */
struct DrFactor {
    std::string text;
    int exponent = 1;
    int m = 0;  // 0 marks the pure-p factors
    int j = 0;
    int s = 0;
    LaurentAQ expr;
};

struct DrFactorization {
    long r = 0;
    KExp power;  // q-exponent of the leading p-power p^(6k+2r+14)
    std::vector<DrFactor> factors;
    // Every factor certified >= (p^(m/2)-1)^2 at unit-circle a, hence
    // D(r) > 0 for all primes p >= 2 (the displayed claim stops at 3).
    bool positive_all_p_ge2 = false;
};
DrFactorization d_factor(long r);

// Exact value of one factor at rational u = a + 1/a.
QSqrtP d_factor_value(const DrFactor& f, long p, const exact::Rat& u);

/** The leading-coefficient cancellation behind the positivity proof:
 * a^17 (a^2-1)^3 (a^2+1) expands to a^25 - 2a^23 + 2a^19 - a^17, so
 * the normalized numerator is monic in p^(1/2). */
struct LeadingIdentity {
    LaurentAQ factored;  // a^17 (a^2-1)^3 (a^2+1), expanded
    LaurentAQ printed;   // a^25 - 2a^23 + 2a^19 - a^17
    bool equal = false;
    bool quotient_is_one = false;
};
LeadingIdentity leading_coefficient_identity();

// q-exponent of the leading numerator power p^(61+6k+3r+2kr) once the
// denominator is cleared; meaningful only alongside numerator data.
KExp numerator_leading_exponent(long r);

/** Empirical threshold scan for the sign of lambda(p^r). */
struct ScanHit {
    long p = 0;
    exact::Rat u;
    Sign sign = Sign::Indeterminate;
};

struct CrScan {
    long r = 0, weight_k = 0, prime_hi = 0;
    int u_grid = 0;
    long points = 0;
    std::optional<long> last_negative_prime;
    std::vector<ScanHit> negatives;
    std::vector<ScanHit> indeterminates;
    std::string verdict;  // "none found" or the largest offending prime
};

/**
 * Scans all primes up to prime_hi against a uniform u-grid on [-2,2]
 * and records every point where lambda(p^r) fails to be positive.
 * Signs are decided in exact arithmetic (the expression is a-symmetric
 * and rational u keeps values inside Q(sqrt p)); the report is labeled
 * empirical because no effective constant is claimed.
 */
CrScan threshold_C_r(long r, long k, const NumeratorData& nd, long prime_hi, int u_grid);

}  // namespace ikeda::series
