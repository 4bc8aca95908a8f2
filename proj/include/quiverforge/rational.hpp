#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace quiverforge {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws InputError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, gcd 1.
std::string format_rational(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace quiverforge
