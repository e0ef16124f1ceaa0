#include "ikeda/eval.hpp"

#include <stdexcept>

#include "ikeda/errors.hpp"
#include "ikeda/primes.hpp"

namespace ikeda::exact {

EvalPoint EvalPoint::from_u(long p, long k, const Rat& u, int precision) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("evaluation point needs a prime p");
    if (k < 1) throw std::invalid_argument("weight parameter k must be positive");
    if (u < -2 || u > 2) throw std::invalid_argument("u must lie in [-2, 2]");
    if (precision < 8) throw std::invalid_argument("precision too small");
    EvalPoint pt;
    pt.p = p;
    pt.k = k;
    pt.u = u;
    pt.precision = precision;
    return pt;
}

EvalPoint EvalPoint::from_gauss(long p, long k, const GaussRat& a, int precision) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("evaluation point needs a prime p");
    if (k < 1) throw std::invalid_argument("weight parameter k must be positive");
    if (a.norm() != 1) throw std::invalid_argument("a must lie on the unit circle exactly");
    if (precision < 8) throw std::invalid_argument("precision too small");
    EvalPoint pt;
    pt.p = p;
    pt.k = k;
    pt.a = a;
    pt.precision = precision;
    return pt;
}

QiSqrtP evaluate_exact_gauss(const LaurentAQ& f, long p, long k, const GaussRat& a) {
    if (!f.lambda_free()) throw std::domain_error("substitute eigenvalue symbols first");
    QiSqrtP acc = QiSqrtP::rational(Rat(0));
    acc.p = p;
    for (const auto& [m, c] : f.terms()) {
        QiSqrtP t = half_power(p, m.q.at(k)).lift();
        if (m.a_exp != 0) {
            GaussRat ap{Rat(1), Rat(0)};
            GaussRat base = m.a_exp > 0 ? a : a.inverse();
            std::int64_t e = m.a_exp > 0 ? m.a_exp : -m.a_exp;
            while (e) {
                if (e & 1) ap = ap * base;
                base = base * base;
                e >>= 1;
            }
            t = t * QiSqrtP{ap, {}, p};
        }
        t = t * QiSqrtP::rational(c);
        acc = acc + t;
    }
    return acc;
}

QSqrtP evaluate_q_only(const LaurentAQ& f, long p, long k) {
    if (!f.lambda_free()) throw std::domain_error("substitute eigenvalue symbols first");
    QSqrtP acc = QSqrtP::rational(Rat(0));
    acc.p = p;
    for (const auto& [m, c] : f.terms()) {
        if (m.a_exp != 0) throw std::domain_error("expression still depends on a");
        acc = acc + half_power(p, m.q.at(k)) * QSqrtP::rational(c);
    }
    return acc;
}

QSqrtP evaluate_symmetric_at_u(const LaurentAQ& f, long p, long k, const QSqrtP& u) {
    auto upoly = to_u_poly(f);
    QSqrtP acc = QSqrtP::rational(Rat(0));
    acc.p = p;
    for (std::size_t j = upoly.size(); j-- > 0;)
        acc = acc * u + evaluate_q_only(upoly[j], p, k);
    return acc;
}

RInt to_interval(const QSqrtP& v, mpfr_prec_t prec) {
    RInt root = RInt::sqrt_ui(static_cast<unsigned long>(v.p > 0 ? v.p : 1), prec);
    return RInt::from_rat(v.r0, prec) + RInt::from_rat(v.r1, prec) * root;
}

CInt to_interval(const QiSqrtP& v, mpfr_prec_t prec) {
    return {to_interval(QSqrtP::real_part(v), prec), to_interval(QSqrtP::imag_part(v), prec)};
}

EvalResult evaluate(const LaurentAQ& f, const EvalPoint& pt) {
    if (!f.lambda_free()) throw std::domain_error("substitute eigenvalue symbols first");
    mpfr_prec_t prec = pt.precision;
    if (pt.a) {
        QiSqrtP v = evaluate_exact_gauss(f, pt.p, pt.k, *pt.a);
        return {to_interval(v, prec), v};
    }
    if (f.symmetric_in_a()) {
        QSqrtP u = QSqrtP::rational(*pt.u);
        u.p = pt.p;
        QSqrtP v = evaluate_symmetric_at_u(f, pt.p, pt.k, u);
        return {CInt(to_interval(v, prec), RInt::from_long(0, prec)), v.lift()};
    }
    // Interval fallback: a = u/2 + i*sqrt(1 - u^2/4).
    RInt half_u = RInt::from_rat(*pt.u / 2, prec);
    RInt imag = (RInt::from_long(1, prec) - half_u * half_u).sqrt();
    CInt a{half_u, imag};
    RInt q = RInt::sqrt_ui(static_cast<unsigned long>(pt.p), prec);
    CInt acc(prec);
    for (const auto& [m, c] : f.terms()) {
        RInt mag = q.pow(m.q.at(pt.k)) * RInt::from_rat(c, prec);
        CInt t = m.a_exp == 0 ? CInt(mag, RInt::from_long(0, prec))
                              : a.pow(m.a_exp) * CInt(mag, RInt::from_long(0, prec));
        acc = acc + t;
    }
    return {acc, std::nullopt};
}

Sign sign_of_real(const EvalResult& r) {
    if (r.exact) {
        int s = QSqrtP::real_part(*r.exact).sign();
        return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
    }
    return r.box.re.sign();
}

Sign sign_at(const LaurentAQ& f, const EvalPoint& pt) { return sign_of_real(evaluate(f, pt)); }

std::string render_decimal(const QSqrtP& v, int digits, mpfr_prec_t prec) {
    return to_interval(v, prec).midpoint_str(digits);
}

}  // namespace ikeda::exact
