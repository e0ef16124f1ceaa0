#pragma once

#include <optional>

#include "ikeda/polyx.hpp"

namespace ikeda::lfactor {

using exact::LaurentAQ;
using exact::PolyX;

// Local factor of the m-th symmetric power shifted by r/2:
// prod_{i=0}^{m} (1 - a^(2i-m) q^(-r) x).
PolyX sym_power_factor(long m, long r);

// Spin denominator in the automorphic normalization, built from the
// symmetric-power product with subset-sum multiplicities.  Degree 2^(2n).
PolyX automorphic_spin_Q(long n);

// Same polynomial at the classical scale x -> q^(2nk-n) x.
PolyX classical_spin_Q(long n);

// Degree-16 genus-4 spin denominator transcribed directly from its
// closed-form factorization; an independent construction that must
// agree with classical_spin_Q(2).
PolyX genus4_Q_closed();

// Functional-equation symmetry of the classical spin polynomial:
// coeff_j == coeff_(deg-j) * q^((2nk-n)(2j-deg)).
bool spin_Q_palindromic(const PolyX& Q, long n);

// Elliptic denominator 1 - lam*x + p^(w-1) x^2; weight w symbolic (k
// standing for w/2... see below) when absent.  With a concrete weight
// the exponents are plain numbers.
PolyX genus1_Q(const LaurentAQ& lam_p, std::optional<long> weight = std::nullopt);

// Degree-four denominator written in terms of lambda(p), lambda(p^2):
// 1 - lam_p x + (lam_p^2 - lam_p2 - p^(2w-4)) x^2 - lam_p p^(2w-3) x^3
//   + p^(4w-6) x^4, with w the scalar weight (symbolic k if absent).
PolyX genus2_Q(const LaurentAQ& lam_p, const LaurentAQ& lam_p2,
               std::optional<long> weight = std::nullopt);

enum class Genus2Numerator {
    AsPrinted,  // 1 - p^(4w+2) x^2 (exponent kept verbatim)
    Corrected,  // 1 - p^(2w-4) x^2
};
PolyX genus2_P(Genus2Numerator variant, std::optional<long> weight = std::nullopt);

// Degree-(4n+1) standard-L denominator: (1-x) * prod over the 2n
// symmetric shifts of the elliptic factor; k drops out entirely.
PolyX standard_L_local(long n);

}  // namespace ikeda::lfactor
