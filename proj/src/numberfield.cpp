#include "ikeda/numberfield.hpp"

#include <sstream>

namespace ikeda::exact {

QSqrtP QSqrtP::pow(long e) const {
    QSqrtP b = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    QSqrtP acc = rational(Rat(1));
    acc.p = p;
    while (n) {
        if (n & 1) acc = acc * b;
        if (n >>= 1) b = b * b;
    }
    return acc;
}

QSqrtP half_power(long p, std::int64_t e) {
    std::int64_t whole = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    bool odd = ((e % 2) + 2) % 2 == 1;
    QSqrtP r = QSqrtP::rational(pow_rat(Rat(p), whole));
    r.p = p;
    if (odd) r = r * QSqrtP::sqrt_p(p);
    return r;
}

std::string QSqrtP::to_string() const {
    std::ostringstream os;
    if (r1 == 0) return r0.get_str();
    if (r0 != 0) os << r0.get_str() << (r1 > 0 ? " + " : " - ");
    else if (r1 < 0) os << "-";
    Rat a1 = abs(r1);
    if (a1 != 1) os << a1.get_str() << "*";
    os << "sqrt(" << p << ")";
    return os.str();
}

std::string QiSqrtP::to_string() const {
    std::ostringstream os;
    os << "(" << QSqrtP::real_part(*this).to_string();
    QSqrtP im = QSqrtP::imag_part(*this);
    if (!im.is_zero()) os << ") + i*(" << im.to_string();
    os << ")";
    return os.str();
}

}  // namespace ikeda::exact
