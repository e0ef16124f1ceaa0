#pragma once

#include <string>

#include "ikeda/laurent.hpp"

namespace ikeda::exact {

/**
 * Parses the small expression language used by the bundled data
 * tables: sums/products over the symbols a and p, integer literals,
 * and exponents that may be rational with denominator 2 and affine in
 * k.  Examples:
 *
 *   a^2-1
 *   (p-1)^3
 *   a*p^(1/2)-1
 *   p^(4k-7/2)*(a+a^-1)^2
 *
 * p^(e) turns into q^(2e), so half-integer exponents of p land on
 * integer exponents of q.  Throws std::invalid_argument with a byte
 * offset on malformed input.
 */
LaurentAQ parse_expression(const std::string& text);

}  // namespace ikeda::exact
