#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rfps {

// Exact rational coefficient. GMP keeps every value in lowest terms with a
// positive denominator, so equality is structural.
using Scalar = mpq_class;

// Accepts `[+-]digits` or `[+-]digits/digits` with a nonzero denominator.
// Throws parse_error; `offset` is added to reported positions.
Scalar parse_scalar(std::string_view text, std::size_t offset = 0);

// Canonical text: "p" or "p/q", sign on the numerator.
std::string to_string(const Scalar& value);

Scalar power(const Scalar& base, unsigned exponent);

// Generalized binomial coefficient C(alpha, j) = alpha (alpha-1) ... (alpha-j+1) / j!.
Scalar binomial(const Scalar& alpha, unsigned j);

} // namespace rfps
