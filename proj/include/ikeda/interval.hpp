#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "ikeda/rational.hpp"

namespace ikeda::exact {

enum class Sign { Negative, Zero, Positive, Indeterminate };

inline const char* sign_name(Sign s) {
    switch (s) {
        case Sign::Negative: return "-";
        case Sign::Zero: return "0";
        case Sign::Positive: return "+";
        default: return "?";
    }
}

/**
 * Closed real interval with MPFR endpoints and outward rounding; every
 * operation encloses the true result, so a sign read off an interval
 * that excludes zero is trustworthy at any precision.
 */
class RInt {
  public:
    explicit RInt(mpfr_prec_t prec = 128);
    RInt(const RInt& o);
    RInt(RInt&& o) noexcept;
    RInt& operator=(RInt o) noexcept;
    ~RInt();

    static RInt from_long(long v, mpfr_prec_t prec = 128);
    static RInt from_rat(const Rat& r, mpfr_prec_t prec = 128);
    static RInt sqrt_ui(unsigned long v, mpfr_prec_t prec = 128);

    mpfr_prec_t prec() const { return prec_; }
    friend RInt operator+(const RInt& x, const RInt& y);
    friend RInt operator-(const RInt& x, const RInt& y);
    friend RInt operator*(const RInt& x, const RInt& y);
    RInt operator-() const;
    RInt inverse() const;  // requires an interval excluding zero
    RInt sqrt() const;     // requires hi >= 0; lo clipped at zero
    RInt pow(long e) const;

    Sign sign() const;
    bool contains_zero() const;
    // Upper bound on the interval width, as a double (inf if huge).
    double width() const;
    double midpoint_d() const;
    std::string midpoint_str(int digits = 20) const;

    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    void swap(RInt& o) noexcept;
};

/** Rectangular complex interval. */
struct CInt {
    RInt re, im;

    explicit CInt(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    CInt(RInt r, RInt i) : re(std::move(r)), im(std::move(i)) {}

    friend CInt operator+(const CInt& x, const CInt& y) { return {x.re + y.re, x.im + y.im}; }
    friend CInt operator-(const CInt& x, const CInt& y) { return {x.re - y.re, x.im - y.im}; }
    friend CInt operator*(const CInt& x, const CInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    CInt operator-() const { return {-re, -im}; }
    CInt inverse() const {
        RInt n = re * re + im * im;
        RInt ninv = n.inverse();
        return {re * ninv, -(im * ninv)};
    }
    CInt pow(long e) const;
    std::string to_string(int digits = 20) const;
};

}  // namespace ikeda::exact
