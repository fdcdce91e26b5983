#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "jointgf/rational.hpp"

namespace jointgf {

// High-precision reals for the singularity-analysis layer. Everything else
// stays in exact rationals. The working precision defaults to 50 significant
// decimal digits and is configurable at program start; numbers created before
// a precision change keep their old precision.
using Real = boost::multiprecision::mpfr_float;

void set_real_precision(unsigned decimal_digits);
unsigned real_precision();

Real to_real(const Rational& value);
Real to_real(const Integer& value);

Real pi_value();

} // namespace jointgf
