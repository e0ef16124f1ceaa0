#include "doctest.h"

#include <map>
#include <utility>
#include <vector>

#include "ikeda/combinat.hpp"

using namespace ikeda;
using namespace ikeda::exact;
using namespace ikeda::combinat;

namespace {

// Independent check: enumerate all 2^(2n) subsets of the odd window
// {1-2n, 3-2n, ..., 2n-1} and bucket by (size, sum).
std::map<std::pair<int, int>, long> subset_counts(int n) {
    std::vector<int> vals;
    for (int v = 1 - 2 * n; v <= 2 * n - 1; v += 2) vals.push_back(v);
    std::map<std::pair<int, int>, long> out;
    for (unsigned mask = 0; mask < (1u << vals.size()); ++mask) {
        int j = 0, r = 0;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (mask >> i & 1u) { ++j; r += vals[i]; }
        ++out[{j, r}];
    }
    return out;
}

}  // namespace

TEST_CASE("subset-sum counts match exhaustive enumeration") {
    for (int n = 1; n <= 5; ++n) {
        auto oracle = subset_counts(n);
        for (int j = 0; j <= 2 * n; ++j) {
            for (int r = -j * (2 * n) - 1; r <= j * (2 * n) + 1; ++r) {
                auto it = oracle.find({j, r});
                long want = it == oracle.end() ? 0 : it->second;
                CHECK(alpha(r, j, n) == Int(want));
            }
        }
    }
}

TEST_CASE("hand-checked small counts") {
    CHECK(alpha(-4, 2, 2) == 1);   // {-3,-1}
    CHECK(alpha(0, 2, 2) == 2);    // {-1,1}, {-3,3}
    CHECK(alpha(0, 0, 2) == 1);    // empty set
    CHECK(alpha(4, 2, 2) == 1);
    CHECK(alpha(0, 1, 2) == 0);    // window is odd numbers only
    CHECK(beta(0, 2, 2) == 1);
    CHECK(beta(1, 1, 2) == 1);
    CHECK(beta(-3, 1, 2) == 1);
}

TEST_CASE("symmetries and total mass") {
    for (int n = 1; n <= 4; ++n) {
        Int total = 0;
        for (int j = 0; j <= 2 * n; ++j) {
            for (int r = -j * (2 * n - 1); r <= j * (2 * n - 1); ++r) {
                CHECK(alpha(r, j, n) == alpha(-r, j, n));
                CHECK(alpha(r, j, n) == alpha(r, 2 * n - j, n));
                total += alpha(r, j, n);
            }
        }
        CHECK(total == Int(1) << (2 * n));
    }
}

TEST_CASE("difference table over the tabulated window") {
    for (int n = 1; n <= 3; ++n) {
        BetaTable t = beta_table(n);
        CHECK(t.n == n);
        for (const auto& [key, value] : t.entries) {
            auto [j, r] = key;
            CHECK(j >= 0);
            CHECK(j <= n);
            CHECK(value == alpha(r, j, n) - alpha(r, j - 2, n));
        }
        // Every entry of the right parity present, including zeros; a sum
        // of j odd numbers is congruent to j mod 2, so others are skipped.
        for (int j = 0; j <= n; ++j) {
            for (int r = t.r_min(j); r <= t.r_max(j); ++r) {
                bool stored = t.entries.count({j, r}) == 1;
                CHECK(stored == (((r - j) % 2) == 0));
                if (!stored) CHECK(alpha(r, j, n) == 0);
            }
        }
    }
}

TEST_CASE("n=2 single-element row is flat") {
    BetaTable t = beta_table(2);
    for (int r : {-3, -1, 1, 3}) CHECK(t.at(1, r) == 1);
    CHECK(t.at(1, 0) == 0);
    CHECK(t.at(0, 0) == 1);
}

TEST_CASE("csv rendering is stable") {
    std::string csv = alpha_beta_csv(1);
    CHECK(csv ==
          "j,r,alpha,beta\n"
          "0,0,1,1\n"
          "1,-1,1,1\n"
          "1,1,1,1\n");
}
