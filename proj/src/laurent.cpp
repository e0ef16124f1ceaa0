#include "ikeda/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ikeda::exact {

std::string Mono::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto piece = [&](const std::string& s) {
        if (!first) os << "*";
        os << s;
        first = false;
    };
    if (a_exp != 0) piece(a_exp == 1 ? "a" : "a^" + std::to_string(a_exp));
    if (lam_p_exp != 0)
        piece(lam_p_exp == 1 ? "lam_p" : "lam_p^" + std::to_string(lam_p_exp));
    if (lam_p2_exp != 0)
        piece(lam_p2_exp == 1 ? "lam_p2" : "lam_p2^" + std::to_string(lam_p2_exp));
    if (!q.is_zero()) {
        std::ostringstream qe;
        if (q.k_mult != 0) {
            if (q.k_mult == 1)
                qe << "k";
            else if (q.k_mult == -1)
                qe << "-k";
            else
                qe << q.k_mult << "k";
            if (q.base > 0)
                qe << "+" << q.base;
            else if (q.base < 0)
                qe << q.base;
            piece("q^(" + qe.str() + ")");
        } else if (q.base == 1) {
            piece("q");
        } else {
            piece("q^" + std::to_string(q.base));
        }
    }
    if (first) os << "1";
    return os.str();
}

void LaurentAQ::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentAQ::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool LaurentAQ::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::pair<Mono, Rat> LaurentAQ::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Rat LaurentAQ::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

LaurentAQ& LaurentAQ::operator+=(const LaurentAQ& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentAQ& LaurentAQ::operator-=(const LaurentAQ& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentAQ LaurentAQ::operator-() const {
    LaurentAQ r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentAQ operator*(const LaurentAQ& x, const LaurentAQ& y) {
    if (x.terms_.empty() || y.terms_.empty()) return LaurentAQ();
    if (y.terms_.size() == 1) {
        const auto& [m, c] = *y.terms_.begin();
        return x.shifted(m, c);
    }
    if (x.terms_.size() == 1) {
        const auto& [m, c] = *x.terms_.begin();
        return y.shifted(m, c);
    }
    LaurentAQ r;
    const LaurentAQ& small = (x.terms_.size() <= y.terms_.size()) ? x : y;
    const LaurentAQ& large = (x.terms_.size() <= y.terms_.size()) ? y : x;
    Rat prod;
    for (const auto& [ms, cs] : small.terms_) {
        for (const auto& [ml, cl] : large.terms_) {
            prod = cs * cl;
            r.add_term(ms + ml, prod);
        }
    }
    return r;
}

LaurentAQ& LaurentAQ::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

LaurentAQ LaurentAQ::pow(unsigned long e) const {
    LaurentAQ acc(1), b = *this;
    while (e) {
        if (e & 1) acc *= b;
        if (e >>= 1) b *= b;
    }
    return acc;
}

LaurentAQ LaurentAQ::shifted(const Mono& m, const Rat& c) const {
    LaurentAQ r;
    if (c == 0) return r;
    auto hint = r.terms_.end();
    for (const auto& [mm, cc] : terms_)
        hint = r.terms_.emplace_hint(hint, mm + m, cc * c);
    return r;
}

LaurentAQ LaurentAQ::invert_a() const {
    LaurentAQ r;
    for (const auto& [m, c] : terms_) {
        Mono flipped = m;
        flipped.a_exp = -flipped.a_exp;
        r.terms_.emplace(flipped, c);
    }
    return r;
}

LaurentAQ LaurentAQ::substitute_a_one() const {
    LaurentAQ r;
    for (const auto& [m, c] : terms_) {
        Mono flat = m;
        flat.a_exp = 0;
        r.add_term(flat, c);
    }
    return r;
}

bool LaurentAQ::symmetric_in_a() const { return invert_a() == *this; }

bool LaurentAQ::k_free() const {
    for (const auto& [m, c] : terms_)
        if (m.q.k_mult != 0) return false;
    return true;
}

bool LaurentAQ::lambda_free() const {
    for (const auto& [m, c] : terms_)
        if (m.lam_p_exp != 0 || m.lam_p2_exp != 0) return false;
    return true;
}

bool LaurentAQ::q_free() const {
    for (const auto& [m, c] : terms_)
        if (!m.q.is_zero()) return false;
    return true;
}

LaurentAQ LaurentAQ::substitute_k(std::int64_t k) const {
    LaurentAQ r;
    for (const auto& [m, c] : terms_) {
        Mono n = m;
        n.q = {m.q.at(k), 0};
        r.add_term(n, c);
    }
    return r;
}

LaurentAQ LaurentAQ::substitute_lambda(const LaurentAQ& lam_p, const LaurentAQ& lam_p2) const {
    LaurentAQ r;
    for (const auto& [m, c] : terms_) {
        if (m.lam_p_exp < 0 || m.lam_p2_exp < 0)
            throw std::domain_error("negative eigenvalue-symbol exponent");
        Mono n = m;
        n.lam_p_exp = n.lam_p2_exp = 0;
        LaurentAQ piece = term(n, c);
        if (m.lam_p_exp) piece *= lam_p.pow(m.lam_p_exp);
        if (m.lam_p2_exp) piece *= lam_p2.pow(m.lam_p2_exp);
        r += piece;
    }
    return r;
}

std::string LaurentAQ::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Render high-order terms first: iterate the map backwards.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << m.to_string();
        }
    }
    return os.str();
}

LaurentAQ canonicalize(const std::vector<std::tuple<std::int64_t, KExp, Rat>>& raw) {
    LaurentAQ r;
    for (const auto& [a_exp, q, c] : raw) r.add_term({a_exp, 0, 0, q}, c);
    return r;
}

std::optional<LaurentAQ> exact_divide(const LaurentAQ& f, const LaurentAQ& d,
                                      std::size_t max_steps) {
    if (d.is_zero()) throw std::domain_error("division by zero");
    LaurentAQ q, r = f;
    const auto [dm, dc] = d.leading();
    while (!r.is_zero()) {
        if (max_steps-- == 0) return std::nullopt;
        const auto [rm, rc] = r.leading();
        Mono qm = rm - dm;
        Rat qc = rc / dc;
        q += LaurentAQ::term(qm, qc);
        r -= d.shifted(qm, qc);
    }
    return q;
}

std::vector<LaurentAQ> to_u_poly(const LaurentAQ& f) {
    if (!f.lambda_free()) throw std::domain_error("eigenvalue symbols have no u-form");
    // Split by a-exponent; symmetry means coeff(m) == coeff(-m).
    std::map<std::int64_t, LaurentAQ> by_a;
    for (const auto& [m, c] : f.terms()) {
        Mono qpart = m;
        qpart.a_exp = 0;
        by_a[m.a_exp] += LaurentAQ::term(qpart, c);
    }
    std::int64_t top = 0;
    for (const auto& [e, coeff] : by_a) {
        LaurentAQ mirror;
        auto it = by_a.find(-e);
        if (it != by_a.end()) mirror = it->second;
        if (mirror != coeff) throw std::domain_error("expression is not symmetric under a -> 1/a");
        top = std::max(top, e < 0 ? -e : e);
    }
    // a^m + a^-m = S_m(u) with S_0 = 2, S_1 = u, S_m = u*S_{m-1} - S_{m-2}.
    std::vector<std::vector<Int>> S(top + 1);
    if (top >= 0) S[0] = {Int(2)};
    if (top >= 1) S[1] = {Int(0), Int(1)};
    for (std::int64_t m = 2; m <= top; ++m) {
        S[m].assign(m + 1, Int(0));
        for (std::size_t j = 0; j < S[m - 1].size(); ++j) S[m][j + 1] += S[m - 1][j];
        for (std::size_t j = 0; j < S[m - 2].size(); ++j) S[m][j] -= S[m - 2][j];
    }
    std::vector<LaurentAQ> out(static_cast<std::size_t>(top) + 1);
    for (const auto& [e, coeff] : by_a) {
        if (e < 0) continue;
        if (e == 0) {
            out[0] += coeff;
            continue;
        }
        for (std::size_t j = 0; j < S[e].size(); ++j) {
            if (S[e][j] == 0) continue;
            out[j] += coeff * Rat(S[e][j]);
        }
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace ikeda::exact
