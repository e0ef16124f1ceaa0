#include "ikeda/polyx.hpp"

#include <stdexcept>

namespace ikeda::exact {

PolyX& PolyX::operator+=(const PolyX& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

PolyX operator*(const PolyX& x, const PolyX& y) {
    if (x.is_zero() || y.is_zero()) return PolyX();
    PolyX r;
    r.c_.resize(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j].is_zero()) continue;
            r.c_[i + j] += x.c_[i] * y.c_[j];
        }
    }
    r.trim();
    return r;
}

PolyX& PolyX::operator*=(const LaurentAQ& c) {
    for (auto& coeff : c_) coeff *= c;
    trim();
    return *this;
}

PolyX PolyX::pow(unsigned long e) const {
    PolyX acc = one(), b = *this;
    while (e) {
        if (e & 1) acc *= b;
        if (e >>= 1) b *= b;
    }
    return acc;
}

PolyX PolyX::substitute_scale(const LaurentAQ& scale) const {
    if (!scale.is_monomial()) throw std::domain_error("scale substitution needs a monomial");
    PolyX r;
    r.c_.reserve(c_.size());
    LaurentAQ s(1);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        r.c_.push_back(c_[j] * s);
        if (j + 1 < c_.size()) s *= scale;
    }
    r.trim();
    return r;
}

std::vector<LaurentAQ> series_quotient(const PolyX& P, const PolyX& Q, std::size_t order) {
    if (!Q[0].is_one()) throw std::domain_error("series inversion needs constant term 1");
    std::vector<LaurentAQ> c(order + 1);
    for (std::size_t r = 0; r <= order; ++r) {
        c[r] = P[r];
        std::size_t imax = std::min<std::size_t>(r, Q.degree() < 0 ? 0 : Q.degree());
        for (std::size_t i = 1; i <= imax; ++i) c[r] -= Q[i] * c[r - i];
    }
    return c;
}

}  // namespace ikeda::exact
