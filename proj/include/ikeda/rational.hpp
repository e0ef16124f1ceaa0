#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ikeda::exact {

// Arbitrary-precision integers and rationals.  mpq_class keeps values
// reduced with a positive denominator, which is exactly the canonical
// form we rely on for structural equality.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "-n" or "n/d"; used when reading JSON data files where
// rationals travel as decimal strings to stay bit-exact.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("inverse of zero");
    Rat acc(1), b = (e > 0) ? base : Rat(1 / base);
    unsigned long n = (e > 0) ? e : -e;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline int sign_of(const Rat& r) { return sgn(r); }

}  // namespace ikeda::exact
