#include "jointgf/shapes.hpp"

#include <stdexcept>

#include "jointgf/errors.hpp"

namespace jointgf {

namespace {

using Bounds = TrivariateSeries::Bounds;

TrivariateSeries arc_marks(const Bounds& bounds) {
    // u + v + uv
    return TrivariateSeries::monomial(Rational(1), 1, 0, 0, bounds) +
           TrivariateSeries::monomial(Rational(1), 0, 1, 0, bounds) +
           TrivariateSeries::monomial(Rational(1), 1, 1, 0, bounds);
}

} // namespace

ShapeQuadratic shape_quadratic(const Bounds& bounds) {
    const TrivariateSeries s = arc_marks(bounds);
    const TrivariateSeries one = TrivariateSeries::one(bounds);
    const TrivariateSeries z = TrivariateSeries::monomial(Rational(1), 0, 0, 1, bounds);
    const TrivariateSeries u = TrivariateSeries::monomial(Rational(1), 1, 0, 0, bounds);
    const TrivariateSeries v = TrivariateSeries::monomial(Rational(1), 0, 1, 0, bounds);
    ShapeQuadratic q{s * (z + one),
                     -(s * (z + one + one) + one),
                     (one + u) * ((one + v) * (one + z))};
    return q;
}

TrivariateSeries shape_gf(const Bounds& bounds) {
    const ShapeQuadratic q = shape_quadratic(bounds);
    return solve_quadratic(q.a, q.b, q.c, Rational(1));
}

ShapeGrammar shape_grammar(const Bounds& bounds) {
    const TrivariateSeries one = TrivariateSeries::one(bounds);
    const TrivariateSeries z = TrivariateSeries::monomial(Rational(1), 0, 0, 1, bounds);
    const TrivariateSeries u = TrivariateSeries::monomial(Rational(1), 1, 0, 0, bounds);
    const TrivariateSeries v = TrivariateSeries::monomial(Rational(1), 0, 1, 0, bounds);
    const TrivariateSeries uv = TrivariateSeries::monomial(Rational(1), 1, 1, 0, bounds);
    const TrivariateSeries s = arc_marks(bounds);

    ShapeGrammar g{TrivariateSeries(bounds), TrivariateSeries(bounds),
                   TrivariateSeries(bounds), TrivariateSeries(bounds),
                   TrivariateSeries(bounds), TrivariateSeries(bounds),
                   TrivariateSeries(bounds), TrivariateSeries(bounds),
                   TrivariateSeries(bounds)};
    g.shapes = shape_gf(bounds);
    g.interaction = one + z;
    // eliminating the double-tight class from the closed-shape equations:
    // closed = (u+v+uv) (z + shapes - interaction - closed)
    g.closed = (s * (g.shapes - one)) * inverse(one + s);
    g.double_tight = g.shapes - g.interaction - g.closed;
    g.closed_top = u * (z + g.double_tight);
    g.closed_bottom = v * (z + g.double_tight);
    g.closed_both = uv * (z + g.double_tight);
    g.right_closed = g.shapes * g.closed;
    g.tight = z + g.closed;
    return g;
}

UnivariateSeries shape_gf_by_arcs(int order) {
    if (order < 0)
        throw PreconditionError("order >= 0 violated");
    const UnivariateSeries a =
        UnivariateSeries::polynomial({Rational(0), Rational(2), Rational(1)}, order);
    const UnivariateSeries b =
        UnivariateSeries::polynomial({Rational(-1), Rational(-3), Rational(-1)}, order);
    const UnivariateSeries c =
        UnivariateSeries::polynomial({Rational(1), Rational(2), Rational(1)}, order);
    return solve_quadratic(a, b, c, Rational(1));
}

Real shape_singularity_polynomial(const Real& z) {
    return 1 - 2 * z - 9 * z * z - 10 * z * z * z - 3 * z * z * z * z;
}

Real shape_singularity_polynomial_derivative(const Real& z) {
    return -2 - 18 * z - 30 * z * z - 12 * z * z * z;
}

Real shape_singularity() {
    Real lo(0), hi = Real(1) / 3;
    // the root provably lies in (0, 1/3)
    if (!(shape_singularity_polynomial(lo) > 0 && shape_singularity_polynomial(hi) < 0))
        throw std::logic_error("sign change on (0, 1/3) lost");
    for (int iter = 0; iter < 4000; ++iter) {
        const Real mid = (lo + hi) / 2;
        if (mid == lo || mid == hi)
            break;
        if (shape_singularity_polynomial(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

} // namespace jointgf
