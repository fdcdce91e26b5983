#pragma once

#include <vector>

#include "jointgf/real.hpp"
#include "jointgf/univariate_series.hpp"

namespace jointgf {

// Structure class parameters. sigma is the minimum interior stack length,
// tau the minimum exterior stack length, lambda the minimum arc length: an
// interior arc (i, j) is admitted only if j - i >= lambda, so lambda = 2
// forbids arcs between adjacent vertices and lambda = 1 allows them.
struct StructureParams {
    int sigma = 1;
    int tau = 1;
    int lambda = 2;
};

// Throws PreconditionError unless sigma, tau, lambda >= 1.
void validate(const StructureParams& params);

// Generating function of noncrossing perfect matchings by number of arcs,
// (1 - sqrt(1-4z)) / (2z): the Catalan numbers.
UnivariateSeries noncrossing_matching_gf(int order);

// The rational kernel (z^2)^(sigma-1) / (z^(2 sigma) - z^2 + 1); collapses
// to the constant 1 for sigma = 1.
UnivariateSeries stack_kernel(int sigma, int order);

// 1 - z + stack_kernel * sum_{h=2}^{lambda} z^h; the sum is empty for
// lambda = 1.
UnivariateSeries arc_length_kernel(int sigma, int lambda, int order);

// Generating function of secondary structures with n vertices, every
// maximal stack of length >= sigma and every arc of length >= lambda.
// Secondary structures here: each vertex in at most one arc, arcs mutually
// noncrossing. Assembled radical-free: the square root of the stack kernel
// only ever appears squared, as kernel * z^2 / v^2.
UnivariateSeries secondary_gf(int sigma, int lambda, int order);

// The same coefficients through an independent route: the quadratic
// z^(2 sigma) T^2 - q v T + q = 0 cleared of denominators, run as an exact
// integer recurrence. Cheap at high order.
std::vector<Integer> secondary_counts(int sigma, int lambda, int n_max);

// Value of the closed form at a real point 0 <= x inside the analyticity
// domain, with the same branch conventions as the series (the matching
// generating function takes the value 1 at 0). Throws EvaluationDomainError
// naming the violated condition otherwise.
Real secondary_value(int sigma, int lambda, const Real& x);

// Location of the dominant singularity of the secondary-structure
// generating function: the smallest positive root of q v^2 - 4 x^(2 sigma),
// found by scanning for a sign change and bisecting.
Real secondary_radius(int sigma, int lambda);

} // namespace jointgf
