#include "ikeda/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ikeda/errors.hpp"

namespace ikeda::exact {

RInt::RInt(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInt::RInt(const RInt& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInt::RInt(RInt&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RInt& RInt::operator=(RInt o) noexcept {
    swap(o);
    return *this;
}

void RInt::swap(RInt& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
}

RInt::~RInt() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInt RInt::from_long(long v, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RInt RInt::from_rat(const Rat& q, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInt RInt::sqrt_ui(unsigned long v, mpfr_prec_t prec) {
    RInt r(prec);
    mpfr_sqrt_ui(r.lo_, v, MPFR_RNDD);
    mpfr_sqrt_ui(r.hi_, v, MPFR_RNDU);
    return r;
}

RInt operator+(const RInt& x, const RInt& y) {
    RInt r(std::max(x.prec_, y.prec_));
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

RInt operator-(const RInt& x, const RInt& y) {
    RInt r(std::max(x.prec_, y.prec_));
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
}

RInt operator*(const RInt& x, const RInt& y) {
    RInt r(std::max(x.prec_, y.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four endpoint products rounded down.
    mpfr_mul(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_mul(t, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x.hi_, y.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x.hi_, y.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max rounded up.
    mpfr_mul(r.hi_, x.lo_, y.lo_, MPFR_RNDU);
    mpfr_mul(t, x.lo_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, x.hi_, y.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, x.hi_, y.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RInt RInt::operator-() const {
    RInt r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RInt RInt::inverse() const {
    if (contains_zero())
        throw PrecisionExhausted("interval straddles zero; cannot invert");
    RInt r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

RInt RInt::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw std::domain_error("sqrt of a negative interval");
    RInt r(prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInt RInt::pow(long e) const {
    RInt acc = from_long(1, prec_);
    RInt b = (e < 0) ? inverse() : *this;
    unsigned long n = (e < 0) ? -static_cast<unsigned long>(e) : e;
    while (n) {
        if (n & 1) acc = acc * b;
        if (n >>= 1) b = b * b;
    }
    return acc;
}

Sign RInt::sign() const {
    if (mpfr_sgn(lo_) > 0) return Sign::Positive;
    if (mpfr_sgn(hi_) < 0) return Sign::Negative;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::Zero;
    return Sign::Indeterminate;
}

bool RInt::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

double RInt::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double RInt::midpoint_d() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

std::string RInt::midpoint_str(int digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

CInt CInt::pow(long e) const {
    mpfr_prec_t prec = std::max(re.prec(), im.prec());
    CInt acc(RInt::from_long(1, prec), RInt::from_long(0, prec));
    CInt b = (e < 0) ? inverse() : *this;
    unsigned long n = (e < 0) ? -static_cast<unsigned long>(e) : e;
    while (n) {
        if (n & 1) acc = acc * b;
        if (n >>= 1) b = b * b;
    }
    return acc;
}

std::string CInt::to_string(int digits) const {
    return re.midpoint_str(digits) + " + " + im.midpoint_str(digits) + "i";
}

}  // namespace ikeda::exact
