#pragma once

#include <vector>

#include "jointgf/rational.hpp"

namespace jointgf {

// Coefficients f(0..s_max) of the unique power series with f(0) = c(0)
// satisfying A f^2 + B f + C = 0, where a, b, c are the integer coefficient
// sequences of A, B, C and a(0) = 0, b(0) = -1. Extracting the coefficient
// of z^s gives
//   f(s) = c(s) + sum_{i>=1} b(i) f(s-i) + sum_{i>=1} a(i) (f^2)(s-i),
// an O(s_max^2) big-integer recurrence.
std::vector<Integer> quadratic_recurrence_counts(const std::vector<Integer>& a,
                                                 const std::vector<Integer>& b,
                                                 const std::vector<Integer>& c,
                                                 int s_max);

// Convolution of integer sequences truncated to the shorter length.
std::vector<Integer> convolve(const std::vector<Integer>& a,
                              const std::vector<Integer>& b);

} // namespace jointgf
