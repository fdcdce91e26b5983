#pragma once

#include <gmpxx.h>

#include <string>

namespace jointgf {

// Exact coefficient domain. GMP keeps rationals canonical: lowest terms,
// positive denominator. No rounding happens outside the dedicated
// high-precision real layer.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" in base 10.
Rational rational_from_string(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

bool is_integral(const Rational& value);

// The positive rational square root, if value is the square of a rational.
// Returns false otherwise.
bool rational_sqrt(const Rational& value, Rational& root);

} // namespace jointgf
