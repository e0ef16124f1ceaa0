#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ikeda::exact {

/**
 * KExp: exponent of q that may depend affinely on the weight symbol k.
 * q^(base + k_mult*k) stands for p^((base + k_mult*k)/2), so identities
 * proved with a symbolic k hold for every admissible weight at once.
 */
struct KExp {
    std::int64_t base = 0;
    std::int64_t k_mult = 0;

    friend KExp operator+(KExp x, KExp y) { return {x.base + y.base, x.k_mult + y.k_mult}; }
    friend KExp operator-(KExp x, KExp y) { return {x.base - y.base, x.k_mult - y.k_mult}; }
    KExp operator-() const { return {-base, -k_mult}; }
    KExp operator*(std::int64_t n) const { return {base * n, k_mult * n}; }
    bool is_zero() const { return base == 0 && k_mult == 0; }
    std::int64_t at(std::int64_t k) const { return base + k_mult * k; }
    auto operator<=>(const KExp&) const = default;
};

/**
 * Mono: exponent vector of one term.  Symbols: a (Satake parameter),
 * q = p^(1/2), and two placeholder eigenvalue symbols lam_p, lam_p2
 * used by the degree-four local factor whose coefficients are written
 * in terms of lambda(p) and lambda(p^2).
 */
struct Mono {
    std::int64_t a_exp = 0;
    std::int64_t lam_p_exp = 0;
    std::int64_t lam_p2_exp = 0;
    KExp q;

    friend Mono operator+(const Mono& x, const Mono& y) {
        return {x.a_exp + y.a_exp, x.lam_p_exp + y.lam_p_exp, x.lam_p2_exp + y.lam_p2_exp,
                x.q + y.q};
    }
    friend Mono operator-(const Mono& x, const Mono& y) {
        return {x.a_exp - y.a_exp, x.lam_p_exp - y.lam_p_exp, x.lam_p2_exp - y.lam_p2_exp,
                x.q - y.q};
    }
    Mono operator-() const { return {-a_exp, -lam_p_exp, -lam_p2_exp, -q}; }
    Mono operator*(std::int64_t n) const {
        return {a_exp * n, lam_p_exp * n, lam_p2_exp * n, q * n};
    }
    bool is_one() const {
        return a_exp == 0 && lam_p_exp == 0 && lam_p2_exp == 0 && q.is_zero();
    }
    bool k_free() const { return q.k_mult == 0; }
    // Lexicographic; total order compatible with multiplication, so the
    // leading term of a product is the product of leading terms.
    auto operator<=>(const Mono&) const = default;

    std::string to_string() const;
};

inline Mono mono_a(std::int64_t e) { return {e, 0, 0, {0, 0}}; }
inline Mono mono_q(std::int64_t base, std::int64_t k_mult = 0) { return {0, 0, 0, {base, k_mult}}; }
inline Mono mono_lam_p() { return {0, 1, 0, {0, 0}}; }
inline Mono mono_lam_p2() { return {0, 0, 1, {0, 0}}; }

}  // namespace ikeda::exact
