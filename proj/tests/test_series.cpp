#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "ikeda/eigen.hpp"
#include "ikeda/errors.hpp"
#include "ikeda/eval.hpp"
#include "ikeda/exprparse.hpp"
#include "ikeda/series.hpp"

using namespace ikeda;
using namespace ikeda::series;
using exact::EvalPoint;
using exact::GaussRat;
using exact::KExp;
using exact::LaurentAQ;
using exact::make_rat;
using exact::Mono;
using exact::parse_expression;
using exact::PolyX;
using exact::QiSqrtP;
using exact::QSqrtP;
using exact::Rat;

namespace {

EvalPoint circle_point(long p, long k, long tn, long td) {
    Rat t = make_rat(tn, td);
    Rat n = Rat(1) + t * t;
    return EvalPoint::from_gauss(p, k, {(Rat(1) - t * t) / n, (t + t) / n});
}

bool same_value(const QiSqrtP& x, const QiSqrtP& y) { return (x - y).is_zero(); }

// e-data used where any admissible numerator will do: symmetric in a,
// k-laden, with scattered zero entries.
NumeratorData synthetic_numerator() {
    NumeratorData nd;
    nd.genus = 4;
    nd.e.assign(15, LaurentAQ{});
    nd.e[0] = LaurentAQ(1);
    nd.e[1] = (LaurentAQ::var_a(1) + LaurentAQ::var_a(-1)) * LaurentAQ::var_q(1, 2);
    nd.e[2] = parse_expression("p^2") - (LaurentAQ::var_a(2) + LaurentAQ::var_a(-2));
    nd.e[5] = LaurentAQ(-3) * LaurentAQ::var_q(0, 4);
    nd.e[14] = parse_expression("p^7") * (LaurentAQ::var_a(3) + LaurentAQ::var_a(-3));
    nd.provenance = "synthetic test data";
    return nd;
}

}  // namespace

TEST_CASE("spin root inventory matches the factored local polynomial") {
    const auto roots = genus4_roots();
    long with_mult = 0;
    int doubles = 0;
    Mono product;
    for (const auto& rd : roots) {
        with_mult += rd.multiplicity;
        if (rd.multiplicity == 2) {
            ++doubles;
            CHECK(rd.rho == Mono{});
        }
        product = product + rd.rho * rd.multiplicity;
    }
    CHECK(with_mult == 16);
    CHECK(doubles == 1);
    CHECK(product == Mono{});  // exponents cancel pairwise

    // closed under rho -> 1/rho
    for (const auto& rd : roots) {
        bool found = false;
        for (const auto& other : roots)
            if (other.rho == -rd.rho && other.multiplicity == rd.multiplicity) found = true;
        CHECK(found);
    }

    // product of the linear factors == the classical spin polynomial
    // with the p^(2k-1) scale divided out
    PolyX prod = PolyX::one();
    for (const auto& rd : roots) {
        PolyX f = PolyX::one_minus_root(LaurentAQ::term(rd.rho, Rat(1)));
        prod *= rd.multiplicity == 2 ? f * f : f;
    }
    PolyX scaled = lfactor::classical_spin_Q(2).substitute_scale(LaurentAQ::var_q(2, -4));
    CHECK(prod == scaled);
    for (const auto& c : scaled.coeffs()) CHECK(c.k_free());
}

TEST_CASE("partial fractions, two simple roots") {
    // 1/((1-X)(1-pX)): at p=2 the coefficients are -1 and 2 and the
    // series counts 2^(r+1)-1.
    std::vector<RootDatum> roots = {{Mono{}, 1}, {exact::mono_q(2), 1}};
    auto pf = partial_fraction(roots);
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].order == 1);
    CHECK(pf.terms[1].order == 1);
    CHECK(pf.terms[0].coeff.den == LaurentAQ(1) - parse_expression("p"));
    CHECK(pf.terms[1].coeff.den == LaurentAQ(1) - parse_expression("p^-1"));
    CHECK(residue_consistency(pf).empty());

    EvalPoint pt = EvalPoint::from_gauss(2, 1, {Rat(1), Rat(0)});
    CHECK(same_value(g_value(pf, 0, pt), QiSqrtP::rational(Rat(1))));
    for (long r = 0; r <= 6; ++r) {
        QiSqrtP want = QiSqrtP::rational(Rat((1L << (r + 1)) - 1));
        CHECK(same_value(g_value(pf, r, pt), want));
        CHECK(same_value(g_series_value(pf, r, pt), want));
    }
    CHECK(g_value(pf, -1, pt).is_zero());
}

TEST_CASE("rejected root lists") {
    CHECK_THROWS_AS(partial_fraction({{Mono{}, 1}, {Mono{}, 1}}), DegenerateSatake);
    CHECK_THROWS_AS(partial_fraction({{Mono{}, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(partial_fraction({{Mono{}, 2}, {exact::mono_a(2), 2}}),
                    std::invalid_argument);
}

TEST_CASE("residue formulas certified against the expanded polynomial") {
    auto pf = partial_fraction(genus4_roots());
    REQUIRE(pf.terms.size() == 16);
    CHECK(pf.terms[0].order == 2);
    CHECK(pf.terms[0].rho == Mono{});
    CHECK(pf.terms[1].order == 1);
    CHECK(pf.terms[1].rho == Mono{});
    CHECK(pf.Q.degree() == 16);
    CHECK(pf.Q[0].is_one());

    auto failures = residue_consistency(pf);
    for (const auto& f : failures) MESSAGE(f);
    CHECK(failures.empty());
}

TEST_CASE("residue route and series route agree") {
    auto pf = partial_fraction(genus4_roots());

    // x^1 coefficient of 1/Q is the k-free eigenvalue bracket
    auto c01 = exact::series_quotient(PolyX::one(), pf.Q, 1);
    CHECK(c01[0].is_one());
    CHECK(c01[1] ==
          eigen::lambda_p_from_Q(lfactor::classical_spin_Q(2)).expr * LaurentAQ::var_q(2, -4));
    CHECK(c01[1] == eigen::lambda_p_formula(2) * LaurentAQ::var_q(2, -4));

    const EvalPoint pts[] = {circle_point(5, 6, 1, 2), circle_point(7, 6, 1, 3),
                             circle_point(11, 8, 2, 5)};
    for (const auto& pt : pts) {
        CHECK(same_value(g_value(pf, 0, pt), QiSqrtP::rational(Rat(1))));
        for (long r = 0; r <= 12; ++r)
            CHECK(same_value(g_value(pf, r, pt), g_series_value(pf, r, pt)));
    }
}

TEST_CASE("degenerate specialization is refused") {
    auto pf = partial_fraction(genus4_roots());
    // a = 1 collapses a^2 and a^-2 onto the double root
    CHECK_THROWS_AS(g_value(pf, 1, EvalPoint::from_gauss(5, 6, {Rat(1), Rat(0)})),
                    DegenerateSatake);
}

TEST_CASE("numerator data for the degree-four factor") {
    auto nd = genus2_numerator(lfactor::Genus2Numerator::Corrected);
    CHECK(nd.genus == 2);
    REQUIRE(nd.e.size() == 3);  // 1 - p^(2w-4) x^2
    CHECK(nd.e[0].is_one());
    CHECK(nd.e[1].is_zero());

    CHECK(lambda_pr(nd, 0).is_one());
    CHECK(lambda_pr(nd, 1) == LaurentAQ::sym_lam_p());
    CHECK(lambda_pr(nd, 2) == LaurentAQ::sym_lam_p2());
    for (long r = 0; r <= 8; ++r) CHECK(lambda_pr(nd, r) == lambda_pr_convolution(nd, r));

    // the misprinted numerator shifts the x^2 coefficient by exactly
    // the exponent discrepancy
    auto printed = genus2_numerator(lfactor::Genus2Numerator::AsPrinted);
    CHECK(lambda_pr(printed, 2) ==
          LaurentAQ::sym_lam_p2() + LaurentAQ::var_q(-8, 4) - LaurentAQ::var_q(4, 8));
}

TEST_CASE("numerator data validation and JSON form") {
    NumeratorData bad;
    bad.genus = 4;
    CHECK_THROWS_AS(lambda_pr(bad, 1), NumeratorDataRequired);
    bad.e.assign(15, LaurentAQ{});
    bad.e[0] = LaurentAQ(2);
    CHECK_THROWS_AS(lambda_pr(bad, 1), NumeratorDataRequired);

    const char* text = R"({
      "genus": 4, "provenance": "inline test",
      "e": [
        {"xpow": 0, "terms": [{"a_exp": 0, "q_base": 0, "q_kmult": 0, "num": "1", "den": "1"}]},
        {"xpow": 1, "terms": [{"a_exp": 1, "q_base": 2, "q_kmult": 4, "num": "-3", "den": "2"},
                               {"a_exp": -1, "q_base": 2, "q_kmult": 4, "num": "-3", "den": "2"}]},
        {"xpow": 14, "terms": []}
      ]
    })";
    auto nd = load_numerator_json(text);
    CHECK(nd.genus == 4);
    REQUIRE(nd.e.size() == 15);
    CHECK(nd.e[0].is_one());
    CHECK(nd.e[1] == (LaurentAQ::var_a(1) + LaurentAQ::var_a(-1)) *
                         LaurentAQ::term(exact::mono_q(2, 4), make_rat(-3, 2)));
    CHECK(nd.e[7].is_zero());

    const char* short_data = R"({"genus": 4, "e": [
      {"xpow": 0, "terms": [{"a_exp": 0, "q_base": 0, "num": "1", "den": "1"}]}]})";
    CHECK_THROWS_AS(load_numerator_json(short_data), NumeratorDataRequired);
    CHECK(!load_numerator_file("/nonexistent/path.json").has_value());
}

TEST_CASE("generating-function assembly equals direct division") {
    auto nd = synthetic_numerator();
    CHECK(lambda_pr(nd, 0).is_one());
    for (long r = 0; r <= 12; ++r) CHECK(lambda_pr(nd, r) == lambda_pr_convolution(nd, r));

    // and the residue form of g reproduces the same values pointwise:
    // lambda(p^r) = sum_i e_i p^((2k-1)(r-i)) g(r-i)
    auto pf = partial_fraction(genus4_roots());
    const EvalPoint pts[] = {circle_point(5, 6, 1, 2), circle_point(7, 8, 3, 7)};
    for (const auto& pt : pts) {
        for (long r = 0; r <= 8; ++r) {
            QiSqrtP assembled = QiSqrtP::rational(Rat(0));
            for (long i = 0; i < static_cast<long>(nd.e.size()) && i <= r; ++i) {
                LaurentAQ scale = LaurentAQ::var_q(-2 * (r - i), 4 * (r - i));
                QiSqrtP term = exact::evaluate_exact_gauss(nd.e[i] * scale, pt.p, pt.k, *pt.a);
                assembled = assembled + term * g_value(pf, r - i, pt);
            }
            QiSqrtP direct = exact::evaluate_exact_gauss(lambda_pr(nd, r), pt.p, pt.k, *pt.a);
            CHECK(same_value(assembled, direct));
        }
    }
}

TEST_CASE("residue table rows all verified") {
    auto rep = verify_appendix(data::residue_table());
    REQUIRE(rep.rows.size() == 16);
    for (const auto& row : rep.rows) {
        INFO(row.label, ": ", row.note);
        CHECK(row.match);
    }
    CHECK(rep.all_match());
    CHECK(rep.structure_second_is_minus7_first);
    CHECK(rep.reconstruction_ok);
    CHECK(rep.points_used == 5);

    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].pole_corrected == (i == 5));
        CHECK(rep.rows[i].method == (i == 12 ? "numeric" : "symbolic"));
    }
}

TEST_CASE("residue table JSON round trip and shipped copy") {
    auto rows = residue_rows_from_json(data::residue_table_json());
    const auto& ref = data::residue_table();
    REQUIRE(rows.size() == ref.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].label == ref[i].label);
        CHECK(rows[i].pole_b == ref[i].pole_b);
        CHECK(rows[i].pole_c == ref[i].pole_c);
        CHECK(rows[i].pole_c_used == ref[i].pole_c_used);
        CHECK(rows[i].order == ref[i].order);
        CHECK(rows[i].numerator == ref[i].numerator);
        CHECK(rows[i].denominator == ref[i].denominator);
        CHECK(rows[i].flag == ref[i].flag);
    }

    std::ifstream shipped(std::string(IKEDA_DATA_DIR) + "/appendix_residues.json");
    REQUIRE(shipped.good());
    std::ostringstream buf;
    buf << shipped.rdbuf();
    CHECK(buf.str() == data::residue_table_json());
}

TEST_CASE("tampered residue rows are caught") {
    auto rows = data::residue_table();
    rows[3].numerator = "-a^2*p^3";  // sign structure intact, power off by one
    auto rep = verify_appendix(rows);
    CHECK(!rep.rows[3].match);
    CHECK(!rep.all_match());

    auto rows2 = data::residue_table();
    rows2[6].pole_c_used = "a";
    auto rep2 = verify_appendix(rows2);
    CHECK(!rep2.rows[6].match);
    CHECK(rep2.rows[6].note.find("does not match") != std::string::npos);

    auto rows3 = data::residue_table();
    rows3.pop_back();
    CHECK_THROWS_AS(verify_appendix(rows3), std::invalid_argument);
}

TEST_CASE("denominator-clearing product certified positive") {
    auto d = d_factor(1);
    REQUIRE(d.factors.size() == 14);
    CHECK(d.positive_all_p_ge2);
    CHECK(d.power == KExp{32, 12});
    CHECK(d.power.at(6) == 2 * 52);  // p-exponent 52 at k=6
    CHECK(d_factor(0).power == KExp{28, 12});

    int listed = 0;
    for (const auto& f : d.factors) listed += f.exponent;
    CHECK(listed == 25);

    // the duplicated display factor is kept twice
    int dup = 0;
    for (const auto& f : d.factors)
        if (f.text == std::string("p^3+(a+a^-1)*p^(3/2)+1")) ++dup;
    CHECK(dup == 2);

    // pinned example: p - (a+1/a) sqrt p + 1 at p=3, u=2 is (sqrt3 - 1)^2
    const DrFactor* pinned = nullptr;
    for (const auto& f : d.factors)
        if (f.text == std::string("p-(a+a^-1)*p^(1/2)+1")) pinned = &f;
    REQUIRE(pinned != nullptr);
    QSqrtP v = d_factor_value(*pinned, 3, Rat(2));
    CHECK(v == QSqrtP{Rat(4), Rat(-2), 3});
    CHECK(v.sign() > 0);
    QSqrtP root3m1 = exact::half_power(3, 1) - QSqrtP{Rat(1), Rat(0), 3};
    CHECK(v == root3m1 * root3m1);
}

TEST_CASE("perfect-square lower bound holds on sampled points") {
    auto d = d_factor(1);
    std::mt19937 gen(20250823);
    for (long p : {2L, 3L, 5L}) {
        std::vector<Rat> us = {Rat(-2), Rat(0), Rat(2)};
        while (us.size() < 20u)
            us.push_back(make_rat(static_cast<long>(gen() % 401) - 200, 100));
        for (const auto& u : us) {
            for (const auto& f : d.factors) {
                if (f.m == 0) continue;
                QSqrtP bound = exact::half_power(p, f.m) - QSqrtP{Rat(1), Rat(0), p};
                QSqrtP val = d_factor_value(f, p, u);
                CHECK(!(val < bound * bound));
                CHECK(val.sign() > 0);
            }
        }
    }
}

TEST_CASE("leading coefficient cancellation") {
    auto li = leading_coefficient_identity();
    CHECK(li.equal);
    CHECK(li.quotient_is_one);
    CHECK(li.printed.size() == 4);
    CHECK(li.factored.coeff(exact::mono_a(25)) == 1);
    CHECK(li.factored.coeff(exact::mono_a(23)) == -2);
    CHECK(li.factored.coeff(exact::mono_a(19)) == 2);
    CHECK(li.factored.coeff(exact::mono_a(17)) == -1);

    for (long r : {0L, 1L, 2L}) {
        auto shifted = li.printed.shifted(exact::mono_a(2 * r));
        auto quot = exact::exact_divide(shifted, LaurentAQ::var_a(2 * r));
        REQUIRE(quot.has_value());
        CHECK(*quot == li.printed);
    }

    CHECK(numerator_leading_exponent(1).at(6) == 2 * 112);
    CHECK(numerator_leading_exponent(0).at(6) == 2 * 97);
}

TEST_CASE("empirical sign scans") {
    auto nd = synthetic_numerator();
    auto scan0 = threshold_C_r(0, 6, nd, 50, 5);
    CHECK(scan0.verdict == "none found");
    CHECK(scan0.negatives.empty());
    CHECK(scan0.indeterminates.empty());
    CHECK(scan0.points == 15 * 5);  // 15 primes below 50

    // an eigenvalue-symbol numerator cannot be scanned numerically
    auto nd2 = genus2_numerator(lfactor::Genus2Numerator::Corrected);
    CHECK_THROWS_AS(threshold_C_r(1, 6, nd2, 20, 3), std::invalid_argument);

    // nor can an a-asymmetric one
    NumeratorData skew = synthetic_numerator();
    skew.e[1] = LaurentAQ::var_a(1);
    CHECK_THROWS_AS(threshold_C_r(1, 6, skew, 20, 3), std::invalid_argument);

    // a numerator that forces negativity must be reported
    NumeratorData neg = synthetic_numerator();
    neg.e[1] = LaurentAQ::term(exact::mono_q(0, 4), Rat(-1000));
    auto scan = threshold_C_r(1, 6, neg, 30, 3);
    CHECK(scan.points == 10 * 3);
    CHECK(scan.negatives.size() == scan.points);
    REQUIRE(scan.last_negative_prime.has_value());
    CHECK(*scan.last_negative_prime == 29);
    CHECK(scan.verdict == "last negative at p = 29");
    CHECK(scan.indeterminates.empty());

    CHECK_THROWS_AS(threshold_C_r(1, 6, nd, 20, 1), std::invalid_argument);
}

TEST_CASE("external degree-16 numerator data, when present") {
    // The real coefficients are not reproducible from first principles
    // here, so they plug in as a side file.  Absent file = skip, not
    // failure; present file = the series must open with the closed-form
    // lambda(p) and both assembly routes must agree.
    auto nd = load_numerator_file(std::string(IKEDA_DATA_DIR) + "/genus4_numerator.json");
    if (!nd) {
        MESSAGE("data/genus4_numerator.json absent; skipping the checks that need it");
        return;
    }
    REQUIRE(nd->genus == 4);
    REQUIRE(nd->e.size() == 15);
    CHECK(nd->e[0].is_one());
    CHECK(lambda_pr(*nd, 1) == eigen::lambda_p_formula(2));
    for (long r = 0; r <= 6; ++r) CHECK(lambda_pr(*nd, r) == lambda_pr_convolution(*nd, r));
}
