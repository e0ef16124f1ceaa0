#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ikeda/monomial.hpp"
#include "ikeda/rational.hpp"

namespace ikeda::exact {

/**
 * LaurentAQ: sparse Laurent polynomial in the symbols a and q (plus the
 * two eigenvalue placeholders) with exact rational coefficients.  Terms
 * live in a sorted map with no explicit zeros, so equality is plain
 * structural comparison.
 */
class LaurentAQ {
  public:
    LaurentAQ() = default;
    explicit LaurentAQ(const Rat& c) {
        if (c != 0) terms_[Mono{}] = c;
    }
    explicit LaurentAQ(long c) : LaurentAQ(Rat(c)) {}

    static LaurentAQ term(const Mono& m, const Rat& c) {
        LaurentAQ r;
        if (c != 0) r.terms_[m] = c;
        return r;
    }
    static LaurentAQ var_a(std::int64_t e = 1) { return term(mono_a(e), Rat(1)); }
    static LaurentAQ var_q(std::int64_t base, std::int64_t k_mult = 0) {
        return term(mono_q(base, k_mult), Rat(1));
    }
    static LaurentAQ sym_lam_p() { return term(mono_lam_p(), Rat(1)); }
    static LaurentAQ sym_lam_p2() { return term(mono_lam_p2(), Rat(1)); }

    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    // Largest term in the monomial order; requires a nonzero value.
    std::pair<Mono, Rat> leading() const;
    Rat coeff(const Mono& m) const;

    LaurentAQ& operator+=(const LaurentAQ& o);
    LaurentAQ& operator-=(const LaurentAQ& o);
    LaurentAQ operator-() const;
    friend LaurentAQ operator+(LaurentAQ x, const LaurentAQ& y) { return x += y; }
    friend LaurentAQ operator-(LaurentAQ x, const LaurentAQ& y) { return x -= y; }
    friend LaurentAQ operator*(const LaurentAQ& x, const LaurentAQ& y);
    LaurentAQ& operator*=(const LaurentAQ& o) { return *this = *this * o; }
    LaurentAQ& operator*=(const Rat& c);
    friend LaurentAQ operator*(LaurentAQ x, const Rat& c) { return x *= c; }
    friend LaurentAQ operator*(const Rat& c, LaurentAQ x) { return x *= c; }
    bool operator==(const LaurentAQ&) const = default;

    LaurentAQ pow(unsigned long e) const;
    // Multiply every term by c * m; cheap because keys only shift.
    LaurentAQ shifted(const Mono& m, const Rat& c = Rat(1)) const;

    LaurentAQ invert_a() const;  // a -> 1/a
    LaurentAQ substitute_a_one() const;
    bool symmetric_in_a() const;
    bool k_free() const;
    bool lambda_free() const;
    bool q_free() const;
    LaurentAQ substitute_k(std::int64_t k) const;
    LaurentAQ substitute_lambda(const LaurentAQ& lam_p, const LaurentAQ& lam_p2) const;

    std::string to_string() const;

  private:
    std::map<Mono, Rat> terms_;
    void add_term(const Mono& m, const Rat& c);
    friend LaurentAQ canonicalize(const std::vector<std::tuple<std::int64_t, KExp, Rat>>&);
};

// Builds the canonical form from an arbitrary pile of raw terms
// (duplicate monomials merge, zeros drop).
LaurentAQ canonicalize(const std::vector<std::tuple<std::int64_t, KExp, Rat>>& raw);

// Quotient f/d when d divides f exactly; nullopt if the division does
// not terminate within max_steps (used as a safety net: callers invoke
// this only where divisibility is guaranteed by construction).
std::optional<LaurentAQ> exact_divide(const LaurentAQ& f, const LaurentAQ& d,
                                      std::size_t max_steps = 1u << 20);

// Rewrites an a-symmetric, lambda-free expression as a polynomial in
// u = a + 1/a.  Index into the result is the u-power, entries are
// q-Laurent coefficients.  Throws if the input is not symmetric.
std::vector<LaurentAQ> to_u_poly(const LaurentAQ& f);

}  // namespace ikeda::exact
