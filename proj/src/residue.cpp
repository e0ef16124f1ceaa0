#include "ikeda/residue.hpp"

#include <cstddef>
#include <stdexcept>

#include "ikeda/errors.hpp"

namespace ikeda::series {

namespace {

// 1 - rho_j/rho_i as an expanded two-term Laurent polynomial.
LaurentAQ one_minus_ratio(const Mono& rho_j, const Mono& rho_i) {
    return LaurentAQ(1) - LaurentAQ::term(rho_j - rho_i, Rat(1));
}

LaurentAQ eval_at_mono(const PolyX& P, const Mono& x0) {
    LaurentAQ acc;
    for (std::size_t j = 0; j < P.coeffs().size(); ++j)
        acc += P[j].shifted(x0 * static_cast<std::int64_t>(j));
    return acc;
}

PolyX derivative(const PolyX& P) {
    std::vector<LaurentAQ> d;
    for (std::size_t j = 1; j < P.coeffs().size(); ++j) d.push_back(P[j] * Rat(long(j)));
    return PolyX::from_coeffs(std::move(d));
}

}  // namespace

std::vector<RootDatum> genus4_roots() {
    std::vector<RootDatum> r;
    r.push_back({Mono{}, 2});
    auto add = [&r](std::int64_t ae, std::int64_t qe) {
        r.push_back({Mono{ae, 0, 0, {qe, 0}}, 1});
    };
    add(-1, -1);
    add(-1, -3);
    add(0, -4);
    add(1, -1);
    add(2, 0);
    add(-1, 1);
    add(1, 1);
    add(0, 2);
    add(-1, 3);
    add(1, 3);
    add(0, 4);
    add(-2, 0);
    add(0, -2);
    add(1, -3);
    return r;
}

PartialFractions partial_fraction(const std::vector<RootDatum>& roots) {
    std::vector<Mono> simple;
    bool has_double = false;
    Mono rho0;
    for (const auto& rd : roots) {
        if (rd.multiplicity == 1) {
            simple.push_back(rd.rho);
        } else if (rd.multiplicity == 2 && !has_double) {
            has_double = true;
            rho0 = rd.rho;
        } else {
            throw std::invalid_argument("partial_fraction: supported multiplicities are 1 "
                                        "and a single 2");
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].rho == roots[j].rho)
                throw DegenerateSatake("coincident roots " + roots[i].rho.to_string());

    PartialFractions pf;
    pf.Q = PolyX::one();
    for (const auto& rd : roots) {
        PolyX f = PolyX::one_minus_root(LaurentAQ::term(rd.rho, Rat(1)));
        pf.Q *= (rd.multiplicity == 2) ? f * f : f;
    }

    if (has_double) {
        LaurentAQ r1(1), rp;
        for (const auto& m : simple) r1 *= one_minus_ratio(m, rho0);
        for (std::size_t i = 0; i < simple.size(); ++i) {
            LaurentAQ t = -LaurentAQ::term(simple[i], Rat(1));
            for (std::size_t j = 0; j < simple.size(); ++j)
                if (j != i) t *= one_minus_ratio(simple[j], rho0);
            rp += t;
        }
        pf.terms.push_back({rho0, 2, {LaurentAQ(1), r1}});
        pf.terms.push_back({rho0, 1, {rp, (r1 * r1).shifted(rho0)}});
    }
    for (std::size_t i = 0; i < simple.size(); ++i) {
        LaurentAQ den(1);
        if (has_double) {
            LaurentAQ f = one_minus_ratio(rho0, simple[i]);
            den *= f * f;
        }
        for (std::size_t j = 0; j < simple.size(); ++j)
            if (j != i) den *= one_minus_ratio(simple[j], simple[i]);
        pf.terms.push_back({simple[i], 1, {LaurentAQ(1), den}});
    }
    return pf;
}

std::vector<std::string> residue_consistency(const PartialFractions& pf) {
    std::vector<std::string> bad;
    const PolyX q1 = derivative(pf.Q);
    const PolyX q2 = derivative(q1);
    const PolyX q3 = derivative(q2);

    const PFTerm* dbl = nullptr;
    for (const auto& t : pf.terms)
        if (t.order == 2) dbl = &t;

    for (const auto& t : pf.terms) {
        const Mono x0 = -t.rho;  // the pole 1/rho
        const std::string at = " at rho = " + t.rho.to_string();
        if (!eval_at_mono(pf.Q, x0).is_zero()) {
            bad.push_back("Q does not vanish" + at);
            continue;
        }
        const bool under_double = dbl && t.rho == dbl->rho;
        if (t.order == 1 && !under_double) {
            // simple root: C = -rho/Q'(1/rho), cross-multiplied
            LaurentAQ lhs = t.coeff.num * eval_at_mono(q1, x0);
            LaurentAQ rhs = -t.coeff.den.shifted(t.rho);
            if (lhs != rhs) bad.push_back("simple residue disagrees with Q' route" + at);
        } else if (t.order == 2) {
            if (!eval_at_mono(q1, x0).is_zero()) {
                bad.push_back("Q' does not vanish at the double root" + at);
                continue;
            }
            const LaurentAQ d2 = eval_at_mono(q2, x0);
            if (d2.is_zero()) bad.push_back("Q'' vanishes at the double root" + at);
            // A = 2 rho0^2 / Q''(1/rho0)
            if (t.coeff.num * d2 != t.coeff.den.shifted(t.rho * 2) * Rat(2))
                bad.push_back("order-2 coefficient disagrees with Q'' route" + at);
            const PFTerm* b = nullptr;
            for (const auto& s : pf.terms)
                if (s.order == 1 && s.rho == t.rho) b = &s;
            if (!b) {
                bad.push_back("double root lacks its order-1 companion" + at);
                continue;
            }
            // B_num = R'(1/rho0) and Q'''(1/rho0) = 6 rho0^2 R'(1/rho0)
            if (eval_at_mono(q3, x0) != b->coeff.num.shifted(t.rho * 2) * Rat(6))
                bad.push_back("order-1 companion disagrees with Q''' route" + at);
            // B_den = rho0 * R(1/rho0)^2 with R(1/rho0) = A_den
            if (b->coeff.den != (t.coeff.den * t.coeff.den).shifted(t.rho))
                bad.push_back("order-1 companion denominator is not rho0 R^2" + at);
        }
    }
    return bad;
}

}  // namespace ikeda::series
