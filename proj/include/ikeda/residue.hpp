#pragma once

#include <string>
#include <vector>

#include "ikeda/laurent.hpp"
#include "ikeda/polyx.hpp"

namespace ikeda::series {

using exact::LaurentAQ;
using exact::Mono;
using exact::PolyX;
using exact::Rat;

struct RootDatum {
    Mono rho;          // reciprocal root, k-free monomial in a,q
    int multiplicity;  // 1 or 2
};

// The sixteen reciprocal roots of the genus-4 spin denominator after
// scaling off p^(2k-1): fourteen simple ones plus 1 twice, listed in
// the same order as the bundled residue table.
std::vector<RootDatum> genus4_roots();

/**
 * Exact fraction num/den of expanded Laurent polynomials.  Fractions
 * stay unreduced; equality questions are settled by cross-multiplying.
 */
struct FracAQ {
    LaurentAQ num, den;
};

/**
 * One term coeff/(1 - rho X)^order of a partial-fraction expansion in
 * the scaled variable X.
 */
struct PFTerm {
    Mono rho;
    int order = 1;
    FracAQ coeff;
};

/**
 * 1/prod (1 - rho_i X)^{mult_i} as a sum of PFTerms, everything
 * k-free.  A multiplicity-2 root rho0 contributes the leading pair
 *   A/(1 - rho0 X)^2 + B/(1 - rho0 X),
 * listed first; the simple roots follow in input order.  Coefficients
 * come from the product formulas
 *   C_i = 1 / prod_{j != i} (1 - rho_j/rho_i)^{mult_j},
 *   A = 1/R(1/rho0),  B = R'(1/rho0)/(rho0 R(1/rho0)^2),
 * with R the product over the simple factors alone.
 */
struct PartialFractions {
    std::vector<PFTerm> terms;
    PolyX Q;  // expanded denominator polynomial in X
};
PartialFractions partial_fraction(const std::vector<RootDatum>& roots);

/**
 * Independent certification of a decomposition: every root must kill
 * the expanded Q, the double root must kill Q' with Q'' surviving, and
 * each coefficient must match the derivative-based residue formulas
 *   C_i = -rho_i/Q'(1/rho_i),  A = 2 rho0^2/Q''(1/rho0),
 *   B = Q'''(1/rho0)/(6 rho0^2) * A^2 * rho0  (equivalently
 *   Q'''(1/rho0) = 6 rho0^2 R'(1/rho0)),
 * cross-multiplied so only polynomial identities are compared.  The
 * two routes share nothing past the root list, and together with the
 * uniqueness of partial fractions they pin the expansion down.
 * Returns human-readable failure descriptions, empty on success.
 */
std::vector<std::string> residue_consistency(const PartialFractions& pf);

}  // namespace ikeda::series
