#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qrs {

// All exact scalar values in the library are arbitrary-precision rationals,
// kept canonical (gcd(|num|, den) = 1, den > 0) at every boundary.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical rational from a 64-bit numerator/denominator pair.
Rational rational_from(long long num, long long den = 1);

/// Parse "p/q" or "p" (optional leading '-'). Throws DomainError on a zero
/// denominator or malformed text.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the value is integral.
std::string to_string(const Rational& value);

/// value^exp with a non-negative integer exponent.
Rational rational_pow(const Rational& value, unsigned long exp);

} // namespace qrs
