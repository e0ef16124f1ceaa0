#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda::combinat {

using exact::Int;

// Number of j-element subsets of {1-2n, 3-2n, ..., 2n-1} whose sum is
// r.  Zero outside j in [0, 2n] or unreachable r.
Int alpha(long r, long j, long n);

// beta(r, j, n) = alpha(r, j, n) - alpha(r, j-2, n); these are the
// multiplicities appearing in the symmetric-power product expansion.
Int beta(long r, long j, long n);

struct BetaTable {
    long n = 0;
    // (j, r) -> beta for j in [0, n], r in [j(j-2n), j(2n-j)] step 2.
    std::map<std::pair<long, long>, Int> entries;

    Int at(long j, long r) const {
        auto it = entries.find({j, r});
        return it == entries.end() ? Int(0) : it->second;
    }
    long r_min(long j) const { return j * (j - 2 * n); }
    long r_max(long j) const { return j * (2 * n - j); }
};

BetaTable beta_table(long n);

// CSV with header "j,r,alpha,beta"; deterministic row order.
std::string alpha_beta_csv(long n);

}  // namespace ikeda::combinat
