#include "ikeda/ingest.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ikeda/primes.hpp"

namespace ikeda::ingest {

std::vector<Int> tau_oracle(std::size_t N) {
    if (N == 0) return {};
    if (N > 100000) throw std::invalid_argument("tau oracle capped at N = 100000");
    // E = prod_{n=1}^{N-1} (1 - q^n) mod q^N, multiplied out naively;
    // coefficients stay in {-1, 0, 1}.
    std::vector<long> E(N, 0);
    E[0] = 1;
    for (std::size_t n = 1; n < N; ++n)
        for (std::size_t j = N - 1; j >= n; --j) E[j] -= E[j - n];
    std::vector<std::pair<std::size_t, long>> sup;
    for (std::size_t j = 0; j < N; ++j)
        if (E[j]) sup.emplace_back(j, E[j]);

    // F = E^24 via 24 passes against the sparse support; tau(m) is the
    // q^{m-1} coefficient of F.
    std::vector<Int> F(N), G(N);
    F[0] = 1;
    for (int pass = 0; pass < 24; ++pass) {
        for (auto& g : G) g = 0;
        for (const auto& [j, c] : sup)
            for (std::size_t i = 0; i + j < N; ++i) {
                if (F[i] == 0) continue;
                if (c > 0)
                    G[i + j] += F[i];
                else
                    G[i + j] -= F[i];
            }
        std::swap(F, G);
    }
    return F;  // F[m-1] = tau(m)
}

void validate_eigenform(const EigenformData& d) {
    if (d.weight_2k < 12 || d.weight_2k % 2 != 0)
        throw std::invalid_argument("weight_2k must be an even integer >= 12, got " +
                                    std::to_string(d.weight_2k));
    for (const auto& [p, a] : d.ap) {
        if (!is_prime(static_cast<std::uint64_t>(p)))
            throw std::invalid_argument("eigenvalue index " + std::to_string(p) +
                                        " is not prime");
        Int bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(d.weight_2k - 1));
        bound *= 4;
        if (a * a > bound)
            throw std::invalid_argument("eigenvalue at p = " + std::to_string(p) +
                                        " violates the bound |a_p| <= 2 p^((2k-1)/2)");
    }
}

SatakeU satake_u(const EigenformData& d, long p) {
    auto it = d.ap.find(p);
    if (it == d.ap.end())
        throw std::invalid_argument("no eigenvalue stored for p = " + std::to_string(p));
    QSqrtP u = QSqrtP::rational(exact::Rat(it->second)) *
               exact::half_power(p, -(d.weight_2k - 1));
    QSqrtP two = QSqrtP{exact::Rat(2), exact::Rat(0), p};
    if ((u - two).sign() > 0 || (u + two).sign() < 0)
        throw std::invalid_argument("Satake coordinate escapes [-2,2] at p = " +
                                    std::to_string(p));
    return {p, u};
}

std::string parity_warning(const EigenformData& d, long n) {
    long k = d.weight_2k / 2;
    if ((n - k) % 2 == 0) return {};
    return "lift into genus " + std::to_string(2 * n) + " needs n = k (mod 2); n = " +
           std::to_string(n) + " and k = " + std::to_string(k) + " differ in parity";
}

EigenformData builtin_delta(long max_prime) {
    EigenformData d;
    d.weight_2k = 12;
    d.label = "delta";
    auto tau = tau_oracle(static_cast<std::size_t>(max_prime));
    for (long p : primes_in(2, max_prime)) d.ap[p] = tau[static_cast<std::size_t>(p) - 1];
    validate_eigenform(d);
    return d;
}

EigenformData load_eigenform_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("eigenform JSON: ") + e.what());
    }
    EigenformData d;
    d.weight_2k = j.at("weight_2k").get<long>();
    d.label = j.value("label", std::string{});
    for (const auto& [key, val] : j.at("ap").items()) {
        std::size_t used = 0;
        long p = std::stol(key, &used);
        if (used != key.size())
            throw std::invalid_argument("bad prime key \"" + key + "\"");
        if (!val.is_string() && !val.is_number_integer())
            throw std::invalid_argument("eigenvalue for p = " + key +
                                        " must be an integer or digit string");
        std::string digits = val.is_string() ? val.get<std::string>() : val.dump();
        try {
            d.ap[p] = Int(digits);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad eigenvalue \"" + digits + "\"");
        }
    }
    validate_eigenform(d);
    return d;
}

EigenformData load_eigenform_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open eigenform file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_eigenform_json(buf.str());
}

std::string eigenform_to_json(const EigenformData& d) {
    std::ostringstream os;
    os << "{\n  \"weight_2k\": " << d.weight_2k << ",\n  \"label\": \"" << d.label
       << "\",\n  \"ap\": {";
    bool first = true;
    for (const auto& [p, a] : d.ap) {
        os << (first ? "" : ",") << "\n    \"" << p << "\": \"" << a.get_str() << "\"";
        first = false;
    }
    os << "\n  }\n}\n";
    return os.str();
}

}  // namespace ikeda::ingest
