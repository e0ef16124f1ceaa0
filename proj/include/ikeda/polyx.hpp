#pragma once

#include <vector>

#include "ikeda/laurent.hpp"

namespace ikeda::exact {

/** Polynomial in x with LaurentAQ coefficients; index is the x-power. */
class PolyX {
  public:
    PolyX() = default;
    explicit PolyX(LaurentAQ c0) : c_{std::move(c0)} { trim(); }
    static PolyX one() { return PolyX(LaurentAQ(1)); }
    static PolyX from_coeffs(std::vector<LaurentAQ> coeffs) {
        PolyX p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }
    // 1 - root*x, the ubiquitous building block.
    static PolyX one_minus_root(const LaurentAQ& root) {
        return from_coeffs({LaurentAQ(1), -root});
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const LaurentAQ& operator[](std::size_t j) const {
        static const LaurentAQ zero;
        return j < c_.size() ? c_[j] : zero;
    }
    const std::vector<LaurentAQ>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    PolyX& operator+=(const PolyX& o);
    PolyX& operator-=(const PolyX& o);
    friend PolyX operator+(PolyX x, const PolyX& y) { return x += y; }
    friend PolyX operator-(PolyX x, const PolyX& y) { return x -= y; }
    friend PolyX operator*(const PolyX& x, const PolyX& y);
    PolyX& operator*=(const PolyX& o) { return *this = *this * o; }
    PolyX& operator*=(const LaurentAQ& c);
    friend PolyX operator*(PolyX x, const LaurentAQ& c) { return x *= c; }
    PolyX pow(unsigned long e) const;
    bool operator==(const PolyX&) const = default;

    // x -> scale*x for a monomial scale: coefficient j picks up scale^j.
    PolyX substitute_scale(const LaurentAQ& scale) const;

  private:
    std::vector<LaurentAQ> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// First coefficients of the power series P/Q; requires Q(0) = 1.
// Returns c_0..c_order inclusive.
std::vector<LaurentAQ> series_quotient(const PolyX& P, const PolyX& Q, std::size_t order);

}  // namespace ikeda::exact
