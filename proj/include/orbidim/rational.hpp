#pragma once

// Exact rational helpers on top of GMP's C++ wrappers.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbidim {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (whitespace tolerated); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// num/den in lowest terms; throws std::domain_error when den == 0.
Rational frac(long num, long den);

bool is_integer(const Rational& q);

/// Converts an integral rational to long; throws std::overflow_error otherwise.
long to_long(const Rational& q);
long to_long(const Integer& z);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

} // namespace orbidim
