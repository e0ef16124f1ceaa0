#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ikeda/numberfield.hpp"
#include "ikeda/rational.hpp"

namespace ikeda::ingest {

using exact::Int;
using exact::QSqrtP;

/**
 * Coefficients tau(1..N) of the weight-12 discriminant form, expanded
 * from q prod_{n>=1} (1-q^n)^24 with no closed-form shortcuts: the
 * product is multiplied out factor by factor and raised to the 24th
 * power term by term, so the values serve as an independent oracle.
 */
std::vector<Int> tau_oracle(std::size_t N);

/** An elliptic Hecke eigenform given by its prime eigenvalue list. */
struct EigenformData {
    long weight_2k = 0;  // even, >= 12
    std::string label;
    std::map<long, Int> ap;
};

// Rejects non-prime indices, odd or undersized weights, and any
// eigenvalue breaking |a_p| <= 2 p^{(2k-1)/2} (checked as an exact
// integer comparison of squares).
void validate_eigenform(const EigenformData& d);

/** Unitarized Satake coordinate at p: u = a_p / p^{(2k-1)/2}, exact in
 * Q(sqrt p) and guaranteed inside [-2,2] by the load-time bound. */
struct SatakeU {
    long p = 0;
    QSqrtP u;
};
SatakeU satake_u(const EigenformData& d, long p);

// The lift into genus 2n needs n and k = weight_2k/2 of equal parity;
// mismatches get a warning string (empty when fine), never an error.
std::string parity_warning(const EigenformData& d, long n);

// The bundled discriminant form: eigenvalues a_p = tau(p) for p up to
// max_prime, straight from the oracle.
EigenformData builtin_delta(long max_prime = 97);

// JSON form { "weight_2k": K, "label": s, "ap": {"2": v, ...} };
// eigenvalues may be numbers or decimal strings (exact at any size).
EigenformData load_eigenform_json(const std::string& text);
EigenformData load_eigenform_file(const std::string& path);
std::string eigenform_to_json(const EigenformData& d);

}  // namespace ikeda::ingest
