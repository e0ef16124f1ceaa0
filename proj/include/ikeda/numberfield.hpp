#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ikeda/rational.hpp"

namespace ikeda::exact {

/** Gaussian rational x + y*i. */
struct GaussRat {
    Rat re{0}, im{0};

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
        return {x.re - y.re, x.im - y.im};
    }
    GaussRat operator-() const { return {-re, -im}; }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussRat inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rat n = norm();
        return {re / n, -im / n};
    }
    bool operator==(const GaussRat&) const = default;
};

/**
 * Element g0 + g1*sqrt(p) with Gaussian-rational components.  This is
 * the exact evaluation backend: substituting q -> sqrt(p) and a unit
 * a from the rational circle keeps every value inside this ring, so
 * sign verdicts are decided with no rounding at all.
 *
 * p = 0 marks a plain rational constant that adopts the partner's p.
 */
struct QiSqrtP {
    GaussRat g0, g1;
    long p = 0;

    static QiSqrtP rational(const Rat& r) { return {{r, Rat(0)}, {}, 0}; }
    static QiSqrtP sqrt_p(long p) { return {{}, {Rat(1), Rat(0)}, p}; }

    bool is_zero() const { return g0.is_zero() && g1.is_zero(); }
    bool is_real() const { return g0.is_real() && g1.is_real(); }

    QiSqrtP operator-() const { return {-g0, -g1, p}; }
    friend QiSqrtP operator+(const QiSqrtP& x, const QiSqrtP& y) {
        long p = merge_p(x, y);
        return {x.g0 + y.g0, x.g1 + y.g1, p};
    }
    friend QiSqrtP operator-(const QiSqrtP& x, const QiSqrtP& y) { return x + (-y); }
    friend QiSqrtP operator*(const QiSqrtP& x, const QiSqrtP& y) {
        long p = merge_p(x, y);
        GaussRat rad{Rat(p), Rat(0)};
        return {x.g0 * y.g0 + x.g1 * y.g1 * rad, x.g0 * y.g1 + x.g1 * y.g0, p};
    }
    QiSqrtP inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        // Multiply by the sqrt-conjugate; the remaining Gaussian
        // denominator is nonzero because sqrt(p) is irrational over Q(i).
        GaussRat den = g0 * g0 - g1 * g1 * GaussRat{Rat(p), Rat(0)};
        GaussRat d = den.inverse();
        return {g0 * d, -(g1 * d), p};
    }
    QiSqrtP pow(long e) const {
        QiSqrtP b = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
        QiSqrtP acc = rational(Rat(1));
        acc.p = p;
        while (n) {
            if (n & 1) acc = acc * b;
            if (n >>= 1) b = b * b;
        }
        return acc;
    }
    bool operator==(const QiSqrtP&) const = default;

    std::string to_string() const;

  private:
    static long merge_p(const QiSqrtP& x, const QiSqrtP& y) {
        if (x.p == 0) return y.p;
        if (y.p == 0 || x.p == y.p) return x.p;
        throw std::domain_error("mixed radicands");
    }
};

/** Real slice r0 + r1*sqrt(p); supports exact sign decisions. */
struct QSqrtP {
    Rat r0{0}, r1{0};
    long p = 0;

    static QSqrtP rational(const Rat& r) { return {r, Rat(0), 0}; }
    static QSqrtP sqrt_p(long p) { return {Rat(0), Rat(1), p}; }
    static QSqrtP real_part(const QiSqrtP& v) { return {v.g0.re, v.g1.re, v.p}; }
    static QSqrtP imag_part(const QiSqrtP& v) { return {v.g0.im, v.g1.im, v.p}; }

    QiSqrtP lift() const { return {{r0, Rat(0)}, {r1, Rat(0)}, p}; }
    bool is_zero() const { return r0 == 0 && r1 == 0; }

    QSqrtP operator-() const { return {-r0, -r1, p}; }
    friend QSqrtP operator+(const QSqrtP& x, const QSqrtP& y) {
        long p = merge_p(x, y);
        return {x.r0 + y.r0, x.r1 + y.r1, p};
    }
    friend QSqrtP operator-(const QSqrtP& x, const QSqrtP& y) { return x + (-y); }
    friend QSqrtP operator*(const QSqrtP& x, const QSqrtP& y) {
        long p = merge_p(x, y);
        return {x.r0 * y.r0 + x.r1 * y.r1 * p, x.r0 * y.r1 + x.r1 * y.r0, p};
    }
    QSqrtP inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rat den = r0 * r0 - r1 * r1 * p;
        return {r0 / den, -r1 / den, p};
    }
    QSqrtP pow(long e) const;
    bool operator==(const QSqrtP&) const = default;

    // Exact sign: +1, 0, -1.  Never indeterminate.
    int sign() const {
        int s0 = sign_of(r0), s1 = sign_of(r1);
        if (s1 == 0) return s0;
        if (s0 == 0) return s1;
        if (s0 == s1) return s0;
        // Opposite signs: compare r0^2 against r1^2 * p.
        Rat lhs = r0 * r0, rhs = r1 * r1 * p;
        if (lhs == rhs) return 0;  // impossible for p prime unless both zero
        return (lhs > rhs) ? s0 : s1;
    }
    friend bool operator<(const QSqrtP& x, const QSqrtP& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QSqrtP& x, const QSqrtP& y) { return (x - y).sign() > 0; }

    std::string to_string() const;

  private:
    static long merge_p(const QSqrtP& x, const QSqrtP& y) {
        if (x.p == 0) return y.p;
        if (y.p == 0 || x.p == y.p) return x.p;
        throw std::domain_error("mixed radicands");
    }
};

// p^(e/2) as an exact element of Q(sqrt p); e may be negative or odd.
QSqrtP half_power(long p, std::int64_t e);

}  // namespace ikeda::exact
