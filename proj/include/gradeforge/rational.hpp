#pragma once

// Exact arbitrary-precision integers and fractions. GMP's mpq_class keeps
// values canonical (positive denominator, lowest terms, zero as 0/1) after
// every arithmetic operation; the helpers here add the text format used in
// all JSON payloads and a few conversions the other modules share.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gradeforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "-3/7", "12", "4/6" (reduced on input). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical text form: optional "-", numerator, and "/den" unless den == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Rational make_rational(const Integer& num, const Integer& den);

/// Natural log of |value| without overflowing a double; value must be nonzero.
double log_abs(const Rational& value);
double log_abs(const Integer& value);

double to_double(const Rational& value);

/// value^exponent for a signed exponent; throws DivisionByZero for 0^(-k).
Rational pow(const Rational& base, long exponent);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Least common multiple of all denominators (1 for an empty list).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace gradeforge
