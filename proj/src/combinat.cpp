#include "ikeda/combinat.hpp"

#include <sstream>
#include <stdexcept>

namespace ikeda::combinat {

namespace {

// DP over the 2n odd values; table[j][r + n^2] counts j-subsets with
// sum r.  Sums are confined to [-n^2, n^2] ... extended j all the way
// to 2n so the complement symmetry is visible to callers.
std::vector<std::vector<Int>> subset_sum_table(long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const long span = 2 * n * n;  // max |sum| is n^2
    std::vector<std::vector<Int>> t(2 * n + 1, std::vector<Int>(span + 1, Int(0)));
    t[0][n * n] = 1;
    for (long v = 1 - 2 * n; v <= 2 * n - 1; v += 2) {
        for (long j = 2 * n; j >= 1; --j) {
            for (long idx = 0; idx <= span; ++idx) {
                long prev = idx - v;
                if (prev < 0 || prev > span) continue;
                if (t[j - 1][prev] != 0) t[j][idx] += t[j - 1][prev];
            }
        }
    }
    return t;
}

}  // namespace

Int alpha(long r, long j, long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (j < 0 || j > 2 * n) return Int(0);
    if (r < -n * n || r > n * n) return Int(0);
    auto t = subset_sum_table(n);
    return t[j][r + n * n];
}

Int beta(long r, long j, long n) { return alpha(r, j, n) - alpha(r, j - 2, n); }

BetaTable beta_table(long n) {
    auto t = subset_sum_table(n);
    auto a = [&](long r, long j) {
        if (j < 0 || r < -n * n || r > n * n) return Int(0);
        return t[j][r + n * n];
    };
    BetaTable out;
    out.n = n;
    for (long j = 0; j <= n; ++j)
        for (long r = out.r_min(j); r <= out.r_max(j); r += 2)
            out.entries[{j, r}] = a(r, j) - a(r, j - 2);
    return out;
}

std::string alpha_beta_csv(long n) {
    auto t = subset_sum_table(n);
    std::ostringstream os;
    os << "j,r,alpha,beta\n";
    for (long j = 0; j <= n; ++j) {
        for (long r = j * (j - 2 * n); r <= j * (2 * n - j); r += 2) {
            Int a = t[j][r + n * n];
            Int b = a - (j >= 2 ? t[j - 2][r + n * n] : Int(0));
            os << j << "," << r << "," << a.get_str() << "," << b.get_str() << "\n";
        }
    }
    return os.str();
}

}  // namespace ikeda::combinat
