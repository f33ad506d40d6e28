// Arbitrary-precision integer and rational helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace mh {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses an unsigned or signed decimal string of any length.
/// Throws UsageError on anything that is not a plain decimal integer.
BigInt parse_bigint(std::string_view text);

/// Parses "p/q", "p", or a finite decimal such as "0.37" exactly.
Rational parse_rational(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Canonical "p/q" rendering; integers render as "p/1" so that every
/// exact rational in a report has the same shape.
std::string to_fraction(const Rational& value);

/// Number of significant bits; zero has bit length 0.
std::size_t bit_length(const BigInt& value);

/// Nearest double to an exact rational, without overflow for huge
/// numerators and denominators of similar size.
double to_double(const Rational& value);

/// printf-style %.*g rendering. glibc rounds the exact binary value to
/// nearest with ties to even.
std::string format_double(double value, int significant_digits);

/// Fixed-point rendering with the given number of decimals.
std::string format_fixed(double value, int decimals);

}  // namespace mh
