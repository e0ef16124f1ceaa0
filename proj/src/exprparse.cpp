#include "ikeda/exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace ikeda::exact {

namespace {

// Exponent value: (base + k_mult*k) / 2, stored doubled so halves stay
// integral.
struct Exp2 {
    long long base2 = 0;
    long long k2 = 0;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    LaurentAQ run() {
        LaurentAQ v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expression parse error at byte " + std::to_string(pos_) +
                                    ": " + why + " in \"" + s_ + "\"");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) neg = (s_[pos_++] == '-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    LaurentAQ expr() {
        LaurentAQ acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentAQ term() {
        LaurentAQ acc = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc *= factor();
            } else if (pos_ < s_.size() &&
                       (s_[pos_] == '(' || s_[pos_] == 'a' || s_[pos_] == 'p' ||
                        std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
                // Juxtaposition, e.g. "(p-1)(p+1)".
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    LaurentAQ factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected factor");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentAQ inner = expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_pow_poly(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            LaurentAQ lit{Rat(static_cast<long>(v))};
            return maybe_pow_poly(lit);
        }
        if (c == 'a') {
            ++pos_;
            Exp2 e = maybe_exponent();
            if (e.k2 != 0 || e.base2 % 2 != 0) fail("exponent of a must be an integer");
            return LaurentAQ::var_a(e.base2 / 2);
        }
        if (c == 'p') {
            ++pos_;
            Exp2 e = maybe_exponent();
            // q = p^(1/2): exponent of q is twice the exponent of p.
            return LaurentAQ::var_q(e.base2, e.k2);
        }
        fail("unexpected character");
    }

    // Integer powers of non-monomial bases.
    LaurentAQ maybe_pow_poly(const LaurentAQ& base) {
        skip_ws();
        if (!eat('^')) return base;
        skip_ws();
        bool wrapped = eat('(');
        long long e = integer();
        if (wrapped && !eat(')')) fail("expected ')'");
        if (e < 0) fail("negative power of a compound expression");
        return base.pow(static_cast<unsigned long>(e));
    }

    // Exponent of a bare symbol; defaults to 1.  Doubled bookkeeping.
    Exp2 maybe_exponent() {
        skip_ws();
        if (!eat('^')) return {2, 0};
        skip_ws();
        if (eat('(')) {
            Exp2 e = affine();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return {2 * integer(), 0};
    }

    // Sum of terms c, c/2, ck, (c/2)k, k.
    Exp2 affine() {
        Exp2 acc;
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (eat('-'))
                sign = -1;
            else if (!eat('+') && !first)
                break;
            skip_ws();
            if (pos_ >= s_.size()) fail("expected exponent term");
            long long num = 1;
            bool have_num = false;
            if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num = integer();
                have_num = true;
            }
            long long num2 = 2 * num;
            if (eat('/')) {
                long long den = integer();
                if (den != 2) fail("only halves are allowed in exponents");
                num2 = num;
            }
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == 'k') {
                ++pos_;
                acc.k2 += sign * num2;
                // Allow a trailing half after k?  Not used; keep strict.
            } else {
                if (!have_num) fail("expected exponent term");
                acc.base2 += sign * num2;
            }
            first = false;
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
        }
        return acc;
    }
};

}  // namespace

LaurentAQ parse_expression(const std::string& text) { return Parser(text).run(); }

}  // namespace ikeda::exact
