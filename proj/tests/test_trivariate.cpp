#include <doctest.h>

#include <random>

#include "jointgf/errors.hpp"
#include "jointgf/shapes.hpp"
#include "jointgf/trivariate_series.hpp"

#include "support.hpp"

using namespace jointgf;

namespace {

TrivariateSeries random_trivariate(std::mt19937& rng, const TrivariateSeries::Bounds& bounds) {
    std::uniform_int_distribution<int> num(-3, 3);
    TrivariateSeries s(bounds);
    for (int n = 0; n <= bounds[0]; ++n)
        for (int m = 0; m <= bounds[1]; ++m)
            for (int h = 0; h <= bounds[2]; ++h)
                s.set_coeff(n, m, h, Rational(num(rng)));
    return s;
}

} // namespace

TEST_SUITE_BEGIN("trivariate");

TEST_CASE("products of one-dimensional factors") {
    const TrivariateSeries::Bounds bounds{2, 2, 2};
    const auto one_plus_x = TrivariateSeries::one(bounds) +
                            TrivariateSeries::monomial(Rational(1), 1, 0, 0, bounds);
    const auto one_plus_y = TrivariateSeries::one(bounds) +
                            TrivariateSeries::monomial(Rational(1), 0, 1, 0, bounds);
    const auto product = one_plus_x * one_plus_y;
    CHECK(product.coeff(0, 0, 0) == Rational(1));
    CHECK(product.coeff(1, 0, 0) == Rational(1));
    CHECK(product.coeff(0, 1, 0) == Rational(1));
    CHECK(product.coeff(1, 1, 0) == Rational(1));
    CHECK(product.coeff(2, 0, 0) == Rational(0));
    CHECK(product.coeff(1, 1, 1) == Rational(0));
}

TEST_CASE("sequence of the diagonal monomial") {
    const TrivariateSeries::Bounds bounds{4, 4, 4};
    const auto xyz = TrivariateSeries::monomial(Rational(1), 1, 1, 1, bounds);
    const auto seq = sequence(xyz);
    for (int k = 0; k <= 4; ++k)
        CHECK(seq.coeff(k, k, k) == Rational(1));
    CHECK(seq.coeff(1, 0, 0) == Rational(0));
    CHECK(seq.coeff(2, 1, 1) == Rational(0));
    CHECK_THROWS_AS(sequence(TrivariateSeries::one(bounds)), PreconditionError);
}

TEST_CASE("inverse") {
    std::mt19937 rng(5150);
    const TrivariateSeries::Bounds bounds{3, 3, 2};
    for (int trial = 0; trial < 10; ++trial) {
        auto b = random_trivariate(rng, bounds);
        b.set_coeff(0, 0, 0, Rational(2));
        CHECK(b * inverse(b) == TrivariateSeries::one(bounds));
    }
    CHECK_THROWS_AS(inverse(TrivariateSeries({1, 1, 1})), PreconditionError);
}

TEST_CASE("multiplication commutes and truncates per index") {
    std::mt19937 rng(86);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_trivariate(rng, {3, 3, 3});
        const auto b = random_trivariate(rng, {3, 3, 3});
        CHECK(a * b == b * a);
        // box truncation: the same product computed in a larger box agrees
        // after cutting back down
        const auto a_wide = a.truncated({5, 5, 5});
        const auto b_wide = b.truncated({5, 5, 5});
        CHECK((a_wide * b_wide).truncated({3, 3, 3}) == a * b);
    }
}

TEST_CASE("shape quadratic solved in the trivariate ring") {
    const TrivariateSeries::Bounds bounds{4, 4, 4};
    const auto q = shape_quadratic(bounds);
    const auto g = solve_quadratic(q.a, q.b, q.c, Rational(1));

    // the u = v = 0 slice degenerates to -G + (1 + z) = 0
    for (int h = 0; h <= bounds[2]; ++h)
        CHECK(g.coeff(0, 0, h) == (h <= 1 ? Rational(1) : Rational(0)));

    // residual identically zero within bounds
    CHECK((q.a * (g * g) + q.b * g + q.c).is_zero());
}

TEST_CASE("solver residual is zero for planted roots") {
    std::mt19937 rng(271828);
    const TrivariateSeries::Bounds bounds{3, 3, 2};
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_trivariate(rng, bounds);
        f.set_coeff(0, 0, 0, Rational(1));
        auto a = random_trivariate(rng, bounds);
        auto b = random_trivariate(rng, bounds);
        b.set_coeff(0, 0, 0, Rational(-1) - Rational(2) * a.coeff(0, 0, 0));
        const auto c = -(a * (f * f) + b * f);
        CHECK(solve_quadratic(a, b, c, Rational(1)) == f);
    }
}

TEST_CASE("univariate embedding and diagonal") {
    const auto slice = UnivariateSeries::polynomial({Rational(1), Rational(2), Rational(3)}, 4);
    const auto inx = TrivariateSeries::from_univariate(slice, 0, {4, 2, 2});
    CHECK(inx.coeff(1, 0, 0) == Rational(2));
    CHECK(inx.coeff(2, 0, 0) == Rational(3));
    CHECK(inx.coeff(1, 1, 0) == Rational(0));
    const auto diag = inx.diagonal(4);
    CHECK(diag.coeff(2) == Rational(3));
}

TEST_SUITE_END();
