#include <doctest.h>

#include <numeric>

#include "ikeda/eigen.hpp"
#include "ikeda/eval.hpp"
#include "ikeda/ingest.hpp"
#include "ikeda/primes.hpp"

using namespace ikeda;
using namespace ikeda::ingest;
using exact::Int;
using exact::QSqrtP;
using exact::Rat;

TEST_CASE("tau values emerge from the eta product") {
    auto tau = tau_oracle(30);
    REQUIRE(tau.size() == 30);
    CHECK(tau[0] == 1);
    CHECK(tau[1] == -24);
    CHECK(tau[2] == 252);
    CHECK(tau[3] == -1472);
    CHECK(tau[4] == 4830);
    CHECK(tau[5] == -6048);
    CHECK(tau[6] == -16744);
    CHECK(tau[10] == 534612);
    CHECK(tau[11] == -370944);
    CHECK(tau[23] == 21288960);  // tau(24) = tau(8) tau(3)

    CHECK(tau_oracle(0).empty());
    CHECK_THROWS_AS(tau_oracle(100001), std::invalid_argument);
}

TEST_CASE("tau oracle satisfies the Hecke relations") {
    const std::size_t N = 9500;
    auto tau = tau_oracle(N);
    auto t = [&tau](std::size_t n) { return tau[n - 1]; };

    Int p11;
    for (long p : primes_in(2, 97)) {
        mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
        CHECK(t(p * p) == t(p) * t(p) - p11);
    }

    long checked = 0;
    for (std::size_t m = 2; m <= 96; ++m)
        for (std::size_t n = m + 1; m * n <= N; ++n)
            if (std::gcd(m, n) == 1) {
                CHECK(t(m * n) == t(m) * t(n));
                ++checked;
            }
    CHECK(checked > 300);
}

TEST_CASE("builtin discriminant form") {
    auto d = builtin_delta();
    CHECK(d.weight_2k == 12);
    CHECK(d.label == "delta");
    CHECK(d.ap.size() == 25);  // primes up to 97
    CHECK(d.ap.at(2) == -24);
    CHECK(d.ap.at(3) == 252);
    CHECK(d.ap.at(5) == 4830);
    CHECK(d.ap.at(7) == -16744);

    auto tau = tau_oracle(98);
    for (const auto& [p, ap] : d.ap) CHECK(ap == tau[p - 1]);
}

TEST_CASE("Satake coordinate is exact in Q(sqrt p)") {
    auto d = builtin_delta();
    auto s2 = satake_u(d, 2);
    // u = -24/2^(11/2) = -24 sqrt2/64 = -(3/8) sqrt 2
    CHECK((s2.u - QSqrtP{Rat(0), exact::make_rat(-3, 8), 2}).is_zero());
    CHECK(s2.u.sign() < 0);

    EigenformData b;
    b.weight_2k = 12;
    b.ap[2] = 0;
    b.ap[3] = 486;  // 2 * 3^5, inside the 2*3^(11/2) bound; u = (2/3) sqrt 3
    validate_eigenform(b);
    CHECK(satake_u(b, 2).u.is_zero());
    CHECK((satake_u(b, 3).u - QSqrtP{Rat(0), exact::make_rat(2, 3), 3}).is_zero());

    CHECK_THROWS_AS(satake_u(d, 101), std::invalid_argument);
}

TEST_CASE("eigenform validation") {
    EigenformData d;
    d.weight_2k = 12;
    d.ap[2] = 1000000000;  // bound is 2*2^(11/2) ~ 90.5
    CHECK_THROWS_AS(validate_eigenform(d), std::invalid_argument);

    EigenformData e;
    e.weight_2k = 12;
    e.ap[4] = 0;
    CHECK_THROWS_AS(validate_eigenform(e), std::invalid_argument);

    EigenformData w;
    w.weight_2k = 13;
    CHECK_THROWS_AS(validate_eigenform(w), std::invalid_argument);
    w.weight_2k = 10;
    CHECK_THROWS_AS(validate_eigenform(w), std::invalid_argument);

    auto delta = builtin_delta();
    CHECK(parity_warning(delta, 2).empty());       // k = 6, n = 2
    CHECK(!parity_warning(delta, 1).empty());      // genus-2 lift of delta is odd-weight
    CHECK(parity_warning(delta, 4).empty());
}

TEST_CASE("eigenform JSON round trip") {
    auto d = builtin_delta(50);
    auto back = load_eigenform_json(eigenform_to_json(d));
    CHECK(back.weight_2k == d.weight_2k);
    CHECK(back.label == d.label);
    CHECK(back.ap == d.ap);

    CHECK_THROWS_AS(load_eigenform_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(load_eigenform_json(R"({"weight_2k": 12, "ap": {"4": 0}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_eigenform_json(R"({"weight_2k": 12, "ap": {"2": 1000000000}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_eigenform_json(R"({"weight_2k": 12, "ap": {"2x": 1}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_eigenform_file("/nonexistent.json"), std::invalid_argument);

    // string-valued eigenvalues stay exact
    auto big = load_eigenform_json(
        R"({"weight_2k": 30, "label": "t", "ap": {"2": "-32768"}})");
    CHECK(big.ap.at(2) == -32768);
}

TEST_CASE("lift eigenvalue of the discriminant form at p = 2") {
    // genus-2 lift: lambda(p) = a_p + p^k + p^(k-1) with k = 6
    auto d = builtin_delta();
    auto u = satake_u(d, 2);
    auto lam = eigen::lambda_p_formula(1);
    QSqrtP v = exact::evaluate_symmetric_at_u(lam, 2, 6, u.u);
    CHECK((v - QSqrtP::rational(Rat(-24 + 64 + 32))).is_zero());
    CHECK(v.sign() > 0);
}
