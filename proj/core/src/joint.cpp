#include "jointgf/joint.hpp"

#include <string>

#include "jointgf/errors.hpp"
#include "jointgf/recurrences.hpp"
#include "jointgf/shapes.hpp"

namespace jointgf {

namespace {

void require_composable(const StructureParams& params) {
    validate(params);
    if (params.lambda > params.tau + 1)
        throw PreconditionError("lambda <= tau + 1 violated (lambda=" +
                                std::to_string(params.lambda) +
                                ", tau=" + std::to_string(params.tau) + ")");
}

void require_diagonal(const StructureParams& params) {
    validate(params);
    if (params.sigma != params.tau)
        throw PreconditionError("sigma == tau violated (sigma=" +
                                std::to_string(params.sigma) +
                                ", tau=" + std::to_string(params.tau) + ")");
    if (params.lambda > params.sigma + 1)
        throw PreconditionError("lambda <= sigma + 1 violated (lambda=" +
                                std::to_string(params.lambda) +
                                ", sigma=" + std::to_string(params.sigma) + ")");
}

TrivariateSeries power(const TrivariateSeries& base, int exponent) {
    TrivariateSeries acc = TrivariateSeries::one(base.bounds());
    for (int i = 0; i < exponent; ++i)
        acc = acc * base;
    return acc;
}

} // namespace

UnivariateSeries interior_stack_gf(int sigma, int order) {
    StructureParams p;
    p.sigma = sigma;
    validate(p);
    return UnivariateSeries::monomial(Rational(1), 2 * sigma, order) *
           sequence(UnivariateSeries::monomial(Rational(1), 2, order));
}

UnivariateSeries induced_stack_gf(int sigma, int lambda, int order) {
    const UnivariateSeries t = secondary_gf(sigma, lambda, order);
    return interior_stack_gf(sigma, order) * (t * t - UnivariateSeries::one(order));
}

UnivariateSeries interior_stem_gf(int sigma, int lambda, int order) {
    return interior_stack_gf(sigma, order) * sequence(induced_stack_gf(sigma, lambda, order));
}

UnivariateSeries arc_inflation_gf(int sigma, int lambda, int order) {
    const UnivariateSeries t = secondary_gf(sigma, lambda, order);
    return t * t * interior_stem_gf(sigma, lambda, order);
}

InflationPieces build_inflation(const StructureParams& params,
                                const TrivariateSeries::Bounds& bounds) {
    require_composable(params);
    const int nx = bounds[0];
    const int ny = bounds[1];

    InflationPieces pieces{arc_inflation_gf(params.sigma, params.lambda, nx),
                           arc_inflation_gf(params.sigma, params.lambda, ny),
                           TrivariateSeries(bounds),
                           arc_inflation_gf(params.sigma, params.lambda, std::max(nx, ny))};

    // exterior stems: stacks of exterior arcs with induced stacks separated
    // by secondary segments on both rows
    const TrivariateSeries tx = TrivariateSeries::from_univariate(
        secondary_gf(params.sigma, params.lambda, nx), 0, bounds);
    const TrivariateSeries ty = TrivariateSeries::from_univariate(
        secondary_gf(params.sigma, params.lambda, ny), 1, bounds);
    const TrivariateSeries xyz = TrivariateSeries::monomial(Rational(1), 1, 1, 1, bounds);
    const TrivariateSeries one = TrivariateSeries::one(bounds);
    const TrivariateSeries exterior_stack = power(xyz, params.tau) * sequence(xyz);
    const TrivariateSeries induced = exterior_stack * (tx * ty - one);
    const TrivariateSeries exterior_stem = exterior_stack * sequence(induced);
    pieces.exterior_arc_inflation = exterior_stem * tx * ty;
    return pieces;
}

TrivariateSeries joint_gf(const StructureParams& params,
                          const TrivariateSeries::Bounds& bounds) {
    require_composable(params);
    const InflationPieces pieces = build_inflation(params, bounds);
    const TrivariateSeries hx =
        TrivariateSeries::from_univariate(pieces.top_arc_inflation, 0, bounds);
    const TrivariateSeries hy =
        TrivariateSeries::from_univariate(pieces.bottom_arc_inflation, 1, bounds);
    const TrivariateSeries& h0 = pieces.exterior_arc_inflation;
    const TrivariateSeries one = TrivariateSeries::one(bounds);

    // substitute into the shape quadratic and re-solve with constant term 1
    const TrivariateSeries marks = hx + hy + hx * hy;
    const TrivariateSeries a = marks * (h0 + one);
    const TrivariateSeries b = -(marks * (h0 + one + one) + one);
    const TrivariateSeries c = (one + hx) * ((one + hy) * (one + h0));
    const TrivariateSeries inflated_shapes = solve_quadratic(a, b, c, Rational(1));

    const TrivariateSeries tx = TrivariateSeries::from_univariate(
        secondary_gf(params.sigma, params.lambda, bounds[0]), 0, bounds);
    const TrivariateSeries ty = TrivariateSeries::from_univariate(
        secondary_gf(params.sigma, params.lambda, bounds[1]), 1, bounds);
    return tx * ty * inflated_shapes;
}

UnivariateSeries joint_total_gf(const StructureParams& params, int order) {
    require_diagonal(params);
    if (order < 0)
        throw PreconditionError("order >= 0 violated");
    const UnivariateSeries t = secondary_gf(params.sigma, params.lambda, order);
    const UnivariateSeries inner = arc_inflation_gf(params.sigma, params.lambda, order);
    return t * t * compose(shape_gf_by_arcs(order), inner);
}

RecurrenceCoefficients joint_recurrence(int sigma, int order, int lambda) {
    StructureParams params;
    params.sigma = sigma;
    params.tau = sigma;
    params.lambda = lambda;
    require_diagonal(params);
    if (order < 0)
        throw PreconditionError("order >= 0 violated");

    const std::vector<Integer> t = secondary_counts(sigma, lambda, order);
    const std::vector<Integer> t2 = convolve(t, t);
    const std::vector<Integer> t4 = convolve(t2, t2);
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    const int s2 = 2 * sigma;

    auto add_at = [len](std::vector<Integer>& v, int k, const Integer& value) {
        if (k >= 0 && static_cast<std::size_t>(k) < len)
            v[static_cast<std::size_t>(k)] += value;
    };
    auto add_shifted = [len, &add_at](std::vector<Integer>& v, int shift,
                                      const std::vector<Integer>& src, int scale) {
        for (std::size_t i = 0; i < src.size() && i + static_cast<std::size_t>(shift) < len; ++i)
            if (src[i] != 0)
                add_at(v, static_cast<int>(i) + shift, scale * src[i]);
    };

    RecurrenceCoefficients r{std::vector<Integer>(len), std::vector<Integer>(len),
                             std::vector<Integer>(len)};

    // A = z^(2s) (2 - 2 z^2 + 2 z^(2s)) - z^(4s) T^2
    add_at(r.a, s2, 2);
    add_at(r.a, s2 + 2, -2);
    add_at(r.a, 2 * s2, 2);
    add_shifted(r.a, 2 * s2, t2, -1);

    // P = 1 - z^2 + z^(2s) as a sparse polynomial
    const std::vector<std::pair<int, int>> p_terms = {{0, 1}, {2, -1}, {s2, 1}};
    // B = -(P^2 + z^(2s) T^2 P - z^(4s) T^4)
    for (const auto& [d1, c1] : p_terms)
        for (const auto& [d2, c2] : p_terms)
            add_at(r.b, d1 + d2, -(c1 * c2));
    for (const auto& [deg, coeff] : p_terms)
        add_shifted(r.b, s2 + deg, t2, -coeff);
    add_shifted(r.b, 2 * s2, t4, 1);

    // C = P^2 T^2
    for (const auto& [d1, c1] : p_terms)
        for (const auto& [d2, c2] : p_terms)
            add_shifted(r.c, d1 + d2, t2, c1 * c2);

    return r;
}

std::vector<Integer> joint_counts_by_recurrence(int sigma, int s_max, int lambda) {
    const RecurrenceCoefficients r = joint_recurrence(sigma, s_max, lambda);
    return quadratic_recurrence_counts(r.a, r.b, r.c, s_max);
}

} // namespace jointgf
