#pragma once

#include <optional>

#include "ikeda/interval.hpp"
#include "ikeda/laurent.hpp"
#include "ikeda/numberfield.hpp"

namespace ikeda::exact {

/**
 * EvalPoint: where to specialize an expression.  q becomes sqrt(p), k
 * the given integer, and a is a point on the unit circle given either
 * through u = a + 1/a (exact rational) or as an exact Gaussian unit.
 */
struct EvalPoint {
    long p = 0;
    long k = 0;
    std::optional<Rat> u;       // rational in [-2, 2]
    std::optional<GaussRat> a;  // Gaussian with |a| = 1 exactly
    int precision = 128;

    static EvalPoint from_u(long p, long k, const Rat& u, int precision = 128);
    static EvalPoint from_gauss(long p, long k, const GaussRat& a, int precision = 128);
};

struct EvalResult {
    CInt box;
    std::optional<QiSqrtP> exact;
    bool exact_backend() const { return exact.has_value(); }
};

// Substitutes the point into f.  Exact whenever a is a Gaussian unit
// (in particular a = +-1) or f is a-symmetric with rational u; the
// fallback is outward-rounded interval arithmetic at pt.precision.
EvalResult evaluate(const LaurentAQ& f, const EvalPoint& pt);

// Specialized exact paths (f must be lambda-free).
QiSqrtP evaluate_exact_gauss(const LaurentAQ& f, long p, long k, const GaussRat& a);
QSqrtP evaluate_q_only(const LaurentAQ& f, long p, long k);
// f a-symmetric, evaluated at u from Q(sqrt p) (covers rational u).
QSqrtP evaluate_symmetric_at_u(const LaurentAQ& f, long p, long k, const QSqrtP& u);

// Sign of the real part; exact routes never return Indeterminate.
Sign sign_of_real(const EvalResult& r);
Sign sign_at(const LaurentAQ& f, const EvalPoint& pt);

RInt to_interval(const QSqrtP& v, mpfr_prec_t prec);
CInt to_interval(const QiSqrtP& v, mpfr_prec_t prec);

// Deterministic decimal rendering of an exact value.
std::string render_decimal(const QSqrtP& v, int digits = 24, mpfr_prec_t prec = 192);

}  // namespace ikeda::exact
