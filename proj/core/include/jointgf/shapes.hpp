#pragma once

#include "jointgf/real.hpp"
#include "jointgf/trivariate_series.hpp"
#include "jointgf/univariate_series.hpp"

namespace jointgf {

// Coefficients of the functional equation a G^2 + b G + c = 0 satisfied by
// the shape generating function G(u, v, z), where u marks top interior arcs,
// v bottom interior arcs and z exterior arcs:
//   a = (u+v+uv)(z+1),  b = -((u+v+uv)(z+2)+1),  c = (1+u)(1+v)(1+z).
// Each coefficient is symmetric under u <-> v.
struct ShapeQuadratic {
    TrivariateSeries a, b, c;
};

ShapeQuadratic shape_quadratic(const TrivariateSeries::Bounds& bounds);

// G(u, v, z): coefficient (t1, t2, h) counts shapes with t1 top arcs, t2
// bottom arcs and h exterior arcs. Solved from the quadratic with constant
// term 1 (the empty shape).
TrivariateSeries shape_gf(const TrivariateSeries::Bounds& bounds);

// The intermediate classes of the shape grammar, for white-box testing:
// shapes decompose into a right-closed shape and a rightmost interaction
// segment; right-closed shapes split off their rightmost closed shape; a
// closed shape is a tight shape spanned by a top arc, a bottom arc, or both;
// double-tight shapes are what remains after removing interaction segments
// and closed shapes.
struct ShapeGrammar {
    TrivariateSeries shapes;             // G
    TrivariateSeries interaction;        // 1 + z
    TrivariateSeries tight;              // lone exterior arc + closed
    TrivariateSeries closed;
    TrivariateSeries right_closed;
    TrivariateSeries double_tight;
    TrivariateSeries closed_top;         // spanned by a top arc only
    TrivariateSeries closed_bottom;      // spanned by a bottom arc only
    TrivariateSeries closed_both;        // spanned on both rows
};

ShapeGrammar shape_grammar(const TrivariateSeries::Bounds& bounds);

// U(z) = G(z, z, z), shapes counted by total number of arcs; satisfies
// (z^2 + 2z) U^2 - (z^2 + 3z + 1) U + (1+z)^2 = 0.
UnivariateSeries shape_gf_by_arcs(int order);

// The dominant singularity of the shape generating function by arcs: the
// minimal positive root of 1 - 2z - 9z^2 - 10z^3 - 3z^4, located by
// bisection on (0, 1/3) to the limit of the working precision.
Real shape_singularity();

// 1 - 2z - 9z^2 - 10z^3 - 3z^4 and its derivative, at a real point.
Real shape_singularity_polynomial(const Real& z);
Real shape_singularity_polynomial_derivative(const Real& z);

} // namespace jointgf
