#pragma once

#include <vector>

#include "jointgf/secondary.hpp"
#include "jointgf/trivariate_series.hpp"
#include "jointgf/univariate_series.hpp"

namespace jointgf {

// Building blocks of the inflation from shapes to joint structures. A stack
// is a minimal run of 2*sigma..  parallel arcs plus an arbitrary extension;
// an induced stack additionally carries separating secondary segments; a
// stem is a stack followed by arbitrarily many induced stacks.

// z^(2 sigma) / (1 - z^2)
UnivariateSeries interior_stack_gf(int sigma, int order);
// interior_stack_gf * (T^2 - 1)
UnivariateSeries induced_stack_gf(int sigma, int lambda, int order);
// interior_stack_gf / (1 - induced_stack_gf)
UnivariateSeries interior_stem_gf(int sigma, int lambda, int order);

// Weight substituted for one shape arc variable: T^2 times the stem series,
//   w^(2 sigma) T(w)^2 / (1 - w^2 - w^(2 sigma) (T(w)^2 - 1)),
// a series of valuation exactly 2 sigma. Its diagonal specialization is the
// inner function of the supercritical composition.
UnivariateSeries arc_inflation_gf(int sigma, int lambda, int order);

// The three series substituted into the shape generating function.
struct InflationPieces {
    UnivariateSeries top_arc_inflation;       // series in x, valuation 2 sigma
    UnivariateSeries bottom_arc_inflation;    // same coefficients, series in y
    TrivariateSeries exterior_arc_inflation;  // valuation tau in each of x, y, z
    UnivariateSeries diagonal_inflation;      // x = y = z specialization
};

// Requires lambda <= tau + 1 (inflating a collapsed exterior stack yields
// interior arcs of length >= tau + 1, which must clear the arc-length bound).
InflationPieces build_inflation(const StructureParams& params,
                                const TrivariateSeries::Bounds& bounds);

// Generating function of joint structures: coefficient (n, m, h) counts
// joint structures with n top vertices, m bottom vertices and h exterior
// arcs under params. Computed by substituting the inflation pieces into the
// shape quadratic and re-solving in the target ring (equivalent to
// composing with G, without storing G at high trivariate order).
// Requires lambda <= tau + 1.
TrivariateSeries joint_gf(const StructureParams& params,
                          const TrivariateSeries::Bounds& bounds);

// Univariate generating function by total vertex count s = n + m (all
// splits, including n = 0 or m = 0). Requires sigma == tau and
// lambda <= sigma + 1; computed as T^2 * U(zeta).
UnivariateSeries joint_total_gf(const StructureParams& params, int order);

// Integer coefficient sequences of the functional equation
// A J^2 + B J + C = 0 satisfied by the univariate generating function, with
//   A = z^(2s) (2 - 2 z^2 + 2 z^(2s) - z^(2s) T^2)
//   B = -(P^2 + z^(2s) T^2 P - z^(4s) T^4),  P = 1 - z^2 + z^(2s)
//   C = P^2 T^2
// where s = sigma. a(0) = 0 and b(0) = -1 always hold.
struct RecurrenceCoefficients {
    std::vector<Integer> a, b, c;
};

RecurrenceCoefficients joint_recurrence(int sigma, int order, int lambda = 2);

// Exact counts J(0..s_max) from the recurrence implied by the functional
// equation; an O(s_max^2) big-integer computation, independent of the
// composition route.
std::vector<Integer> joint_counts_by_recurrence(int sigma, int s_max, int lambda = 2);

} // namespace jointgf
