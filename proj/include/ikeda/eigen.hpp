#pragma once

#include <map>
#include <string>
#include <vector>

#include "ikeda/laurent.hpp"
#include "ikeda/numberfield.hpp"
#include "ikeda/polyx.hpp"

namespace ikeda::eigen {

using exact::Int;
using exact::LaurentAQ;
using exact::PolyX;
using exact::QSqrtP;
using exact::Rat;

struct LambdaP {
    LaurentAQ expr;
};

// -[x^1] of a local factor with constant term 1.
LambdaP lambda_p_from_Q(const PolyX& Q);

// The closed double-sum form of lambda(p) for a genus-2n lift:
// q^(2nk-n) * sum_j sum_i a^(2i+j-n) * sum_r q^(-r) beta(r,j,n).
LaurentAQ lambda_p_formula(long n);

/**
 * Coefficients of q^r inside the bracket of lambda(p): after pulling
 * out q^(2nk-n), lambda(p) = sum_{r=-n^2}^{n^2} c_r q^r with c_{n^2}=1.
 * Entries are Laurent polynomials in a alone; absent keys mean zero.
 */
struct CrTable {
    long n = 0;
    std::map<long, LaurentAQ> entries;
    const LaurentAQ& at(long r) const;
    LaurentAQ reconstruct() const;  // q^(2nk-n) * sum_r c_r q^r
};
CrTable c_coefficients(long n);

/**
 * Effective positivity bound.  B_r = sum_j (n-j+1)|beta(-r,j,n)| caps
 * |c_r| whenever |a| = 1, so the margin
 *     h(p) = p^(n^2/2) - sum_{r<n^2} B_r p^(r/2)
 * being positive forces lambda(p) > 0.  h is increasing in sqrt(p)
 * (divide by the leading power: what is left is sqrt(p) minus
 * nonnegative multiples of nonincreasing powers), so the first prime
 * with h > 0 certifies every later one.
 */
struct ThresholdResult {
    long n = 0;
    long p0 = 0;
    std::map<long, Int> crude_bounds;          // r -> B_r for r < n^2
    std::vector<std::pair<long, int>> scan;    // (prime, sign of margin) up to p0
    QSqrtP margin_at_p0;
};
ThresholdResult first_sign_threshold(long n);

// The four transcribed Hecke eigenvalues of the genus-4 lift, parsed
// into exact form.  `flag` is nonempty for the one formula whose
// printed bracketing is unbalanced; its expr is the documented
// best-effort reading and is excluded from identity tests.
struct EigenFormula {
    std::string name;
    std::string printed;
    std::string flag;
    LaurentAQ expr;
};
const std::vector<EigenFormula>& eigenvalue_closed_forms();
const EigenFormula& eigenvalue_form(const std::string& name);

/**
 * lambda(p) for genus 4 as p^(2k-1) * (u^2 + u1*u + u0), u = a + 1/a,
 * with the bracket coefficients exact in Q(sqrt p).  The verdict is the
 * exact sign of the bracket's minimum over u in [-2,2] (vertex when it
 * lands inside, else the nearer endpoint).
 */
struct QuadraticInU {
    long p = 0;
    LaurentAQ prefactor;  // q^(4k-2)
    QSqrtP u1, u0;
    QSqrtP min_value;
    QSqrtP min_at;
    bool positive = false;
};
QuadraticInU lambda_p_u_quadratic(long p);

}  // namespace ikeda::eigen
