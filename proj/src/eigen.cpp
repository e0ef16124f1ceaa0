#include "ikeda/eigen.hpp"

#include <stdexcept>

#include "ikeda/combinat.hpp"
#include "ikeda/data_tables.hpp"
#include "ikeda/eval.hpp"
#include "ikeda/exprparse.hpp"
#include "ikeda/primes.hpp"

namespace ikeda::eigen {

using exact::half_power;
using exact::KExp;
using exact::sign_of;

LambdaP lambda_p_from_Q(const PolyX& Q) {
    if (!Q[0].is_one()) throw std::invalid_argument("constant term must be 1");
    return {-Q[1]};
}

LaurentAQ lambda_p_formula(long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    LaurentAQ sum;
    for (long j = 0; j <= n; ++j) {
        LaurentAQ a_part;
        for (long i = 0; i <= n - j; ++i) a_part += LaurentAQ::var_a(2 * i + j - n);
        LaurentAQ q_part;
        for (long r = j * (j - 2 * n); r <= j * (2 * n - j); r += 2) {
            exact::Int b = combinat::beta(r, j, n);
            if (b != 0) q_part += LaurentAQ::var_q(-r) * Rat(b);
        }
        sum += a_part * q_part;
    }
    return LaurentAQ::var_q(-n, 2 * n) * sum;
}

const LaurentAQ& CrTable::at(long r) const {
    static const LaurentAQ zero;
    auto it = entries.find(r);
    return it == entries.end() ? zero : it->second;
}

LaurentAQ CrTable::reconstruct() const {
    LaurentAQ bracket;
    for (const auto& [r, c] : entries) bracket += c * LaurentAQ::var_q(r);
    return LaurentAQ::var_q(-n, 2 * n) * bracket;
}

CrTable c_coefficients(long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    CrTable out;
    out.n = n;
    for (long r = -n * n; r <= n * n; ++r) {
        LaurentAQ c;
        for (long j = 0; j <= n; ++j) {
            exact::Int b = combinat::beta(-r, j, n);
            if (b == 0) continue;
            LaurentAQ a_part;
            for (long i = 0; i <= n - j; ++i) a_part += LaurentAQ::var_a(2 * i + j - n);
            c += a_part * Rat(b);
        }
        if (!c.is_zero()) out.entries[r] = c;
    }
    return out;
}

namespace {

// Margin p^(n^2/2) - sum B_r p^(r/2) at an integer argument, exact.
QSqrtP margin(long m, long nsq, const std::map<long, Int>& B) {
    QSqrtP h = half_power(m, nsq);
    for (const auto& [r, b] : B) h = h - QSqrtP::rational(Rat(b)) * half_power(m, r);
    return h;
}

}  // namespace

ThresholdResult first_sign_threshold(long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    ThresholdResult out;
    out.n = n;
    const long nsq = n * n;
    for (long r = -nsq; r < nsq; ++r) {
        Int b = 0;
        for (long j = 0; j <= n; ++j) {
            Int bj = combinat::beta(-r, j, n);
            b += (n - j + 1) * abs(bj);
        }
        if (b != 0) out.crude_bounds[r] = b;
    }

    // The margin is increasing in sqrt(m), so locate the crossover by
    // doubling then bisecting over integers, and take the next prime.
    long hi = 4;
    while (margin(hi, nsq, out.crude_bounds).sign() <= 0) hi *= 2;
    long lo = 2;
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (margin(mid, nsq, out.crude_bounds).sign() > 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    long p0 = lo;
    while (!ikeda::is_prime(p0)) ++p0;
    out.p0 = p0;
    for (long p = 2; p <= p0; ++p)
        if (ikeda::is_prime(p)) out.scan.emplace_back(p, margin(p, nsq, out.crude_bounds).sign());
    out.margin_at_p0 = margin(p0, nsq, out.crude_bounds);
    return out;
}

const std::vector<EigenFormula>& eigenvalue_closed_forms() {
    static const std::vector<EigenFormula> forms = [] {
        std::vector<EigenFormula> v;
        for (const auto& rec : data::eigenvalue_formulas())
            v.push_back({rec.name, rec.printed, rec.flag, exact::parse_expression(rec.machine)});
        return v;
    }();
    return forms;
}

const EigenFormula& eigenvalue_form(const std::string& name) {
    for (const auto& f : eigenvalue_closed_forms())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown eigenvalue formula: " + name);
}

QuadraticInU lambda_p_u_quadratic(long p) {
    if (!ikeda::is_prime(p)) throw std::invalid_argument("p must be prime");
    QuadraticInU out;
    out.p = p;
    out.prefactor = LaurentAQ::var_q(-2, 4);
    // Strip the prefactor from the genus-4 closed sum and rewrite the
    // remaining symmetric bracket as a monic quadratic in u = a + 1/a.
    LaurentAQ bracket = lambda_p_formula(2) * LaurentAQ::var_q(2, -4);
    auto upoly = exact::to_u_poly(bracket);
    if (upoly.size() != 3 || !upoly[2].is_one())
        throw std::logic_error("bracket is not a monic quadratic in u");
    out.u1 = exact::evaluate_q_only(upoly[1], p, 1);
    out.u0 = exact::evaluate_q_only(upoly[0], p, 1);

    const QSqrtP two{Rat(2), Rat(0), p};
    const QSqrtP four{Rat(4), Rat(0), p};
    QSqrtP vertex = -(out.u1 * QSqrtP::rational(Rat(1, 2)));
    if ((vertex + two).sign() >= 0 && (two - vertex).sign() >= 0) {
        out.min_at = vertex;
        out.min_value = out.u0 - out.u1 * out.u1 * QSqrtP::rational(Rat(1, 4));
    } else if (vertex.sign() < 0) {
        out.min_at = -two;
        out.min_value = four - two * out.u1 + out.u0;
    } else {
        out.min_at = two;
        out.min_value = four + two * out.u1 + out.u0;
    }
    out.positive = out.min_value.sign() > 0;
    return out;
}

}  // namespace ikeda::eigen
