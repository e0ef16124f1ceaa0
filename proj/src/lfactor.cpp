#include "ikeda/lfactor.hpp"

#include <stdexcept>

#include "ikeda/combinat.hpp"

namespace ikeda::lfactor {

using exact::KExp;
using exact::Mono;
using exact::mono_a;
using exact::mono_q;
using exact::Rat;

PolyX sym_power_factor(long m, long r) {
    if (m < 0) throw std::invalid_argument("negative symmetric power");
    PolyX out = PolyX::one();
    for (long i = 0; i <= m; ++i) {
        Mono root = mono_a(2 * i - m) + mono_q(-r);
        out *= PolyX::one_minus_root(LaurentAQ::term(root, Rat(1)));
    }
    return out;
}

PolyX automorphic_spin_Q(long n) {
    auto table = combinat::beta_table(n);
    PolyX out = PolyX::one();
    for (long j = 0; j <= n; ++j) {
        for (long r = table.r_min(j); r <= table.r_max(j); r += 2) {
            auto b = table.at(j, r);
            if (b == 0) continue;
            if (b < 0) throw std::domain_error("negative multiplicity in spin product");
            out *= sym_power_factor(n - j, r).pow(b.get_ui());
        }
    }
    return out;
}

PolyX classical_spin_Q(long n) {
    return automorphic_spin_Q(n).substitute_scale(LaurentAQ::var_q(-n, 2 * n));
}

PolyX genus4_Q_closed() {
    // The sixteen factors of the degree-16 closed form, in display
    // order; every root carries the common p^(2k-1) = q^(4k-2) scale.
    const KExp scale{-2, 4};
    struct F {
        std::int64_t a;
        std::int64_t q;
    };
    const F fs[] = {{1, 1},  {-1, 1},  {1, -1}, {-1, -1}, {1, 3},  {-1, 3}, {1, -3},
                    {-1, -3}, {0, 4},  {0, 2},  {2, 0},   {-2, 0}, {0, -2}, {0, -4},
                    {0, 0},  {0, 0}};
    PolyX out = PolyX::one();
    for (const F& f : fs) {
        Mono root{f.a, 0, 0, scale + KExp{f.q, 0}};
        out *= PolyX::one_minus_root(LaurentAQ::term(root, Rat(1)));
    }
    return out;
}

bool spin_Q_palindromic(const PolyX& Q, long n) {
    long deg = Q.degree();
    if (deg != (1L << (2 * n))) return false;
    const Mono s = mono_q(-n, 2 * n);
    for (long j = 0; j <= deg; ++j) {
        LaurentAQ rhs = Q[deg - j].shifted(s * (2 * j - deg));
        if (Q[j] != rhs) return false;
    }
    return true;
}

namespace {
// q-exponent for p^(c1*w + c0) under a concrete or symbolic weight.
KExp weight_exp(std::optional<long> weight, long c1, long c0) {
    if (weight) return {2 * (c1 * *weight + c0), 0};
    return {2 * c0, 2 * c1};
}
}  // namespace

PolyX genus1_Q(const LaurentAQ& lam_p, std::optional<long> weight) {
    // Symbolic weight means w = 2k, the natural elliptic convention.
    KExp e = weight ? KExp{2 * (*weight - 1), 0} : KExp{-2, 4};
    return PolyX::from_coeffs({LaurentAQ(1), -lam_p, LaurentAQ::var_q(e.base, e.k_mult)});
}

PolyX genus2_Q(const LaurentAQ& lam_p, const LaurentAQ& lam_p2, std::optional<long> weight) {
    KExp e2 = weight_exp(weight, 2, -4);   // p^(2w-4)
    KExp e3 = weight_exp(weight, 2, -3);   // p^(2w-3)
    KExp e4 = weight_exp(weight, 4, -6);   // p^(4w-6)
    LaurentAQ c2 = lam_p * lam_p - lam_p2 - LaurentAQ::var_q(e2.base, e2.k_mult);
    LaurentAQ c3 = -(lam_p * LaurentAQ::var_q(e3.base, e3.k_mult));
    return PolyX::from_coeffs(
        {LaurentAQ(1), -lam_p, c2, c3, LaurentAQ::var_q(e4.base, e4.k_mult)});
}

PolyX genus2_P(Genus2Numerator variant, std::optional<long> weight) {
    KExp e = variant == Genus2Numerator::AsPrinted ? weight_exp(weight, 4, 2)
                                                   : weight_exp(weight, 2, -4);
    return PolyX::from_coeffs({LaurentAQ(1), LaurentAQ(), -LaurentAQ::var_q(e.base, e.k_mult)});
}

PolyX standard_L_local(long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    PolyX out = PolyX::one_minus_root(LaurentAQ(1));
    for (long i = 1; i <= 2 * n; ++i) {
        // Shift s -> s + k + n - i of the elliptic factor; the weight
        // cancels against the Satake normalization.
        long e = 2 * i - 2 * n - 1;
        out *= PolyX::one_minus_root(LaurentAQ::term(mono_a(1) + mono_q(e), Rat(1)));
        out *= PolyX::one_minus_root(LaurentAQ::term(mono_a(-1) + mono_q(e), Rat(1)));
    }
    return out;
}

}  // namespace ikeda::lfactor
