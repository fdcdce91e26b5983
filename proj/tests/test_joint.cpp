#include <doctest.h>

#include <string>

#include "jointgf/errors.hpp"
#include "jointgf/joint.hpp"
#include "jointgf/oracle.hpp"
#include "jointgf/recurrences.hpp"
#include "jointgf/secondary.hpp"

#include "support.hpp"

using namespace jointgf;

TEST_SUITE_BEGIN("joint");

TEST_CASE("inflation pieces") {
    const TrivariateSeries::Bounds bounds{8, 8, 4};

    const auto loose = build_inflation({1, 1, 2}, bounds);
    CHECK(loose.diagonal_inflation.valuation() == 2);
    CHECK(loose.top_arc_inflation.valuation() == 2);

    const auto strict = build_inflation({2, 2, 2}, bounds);
    CHECK(strict.diagonal_inflation.valuation() == 4);
    CHECK(strict.top_arc_inflation.coeff(4) == Rational(1));

    // the exterior piece has valuation tau in each variable and at least one
    // vertex per row for every exterior arc
    for (const StructureParams params : {StructureParams{1, 1, 2}, StructureParams{2, 3, 2}}) {
        const auto pieces = build_inflation(params, bounds);
        const auto& ext = pieces.exterior_arc_inflation;
        CHECK(ext.constant_term() == Rational(0));
        int min_n = bounds[0] + 1, min_m = bounds[1] + 1, min_h = bounds[2] + 1;
        for (int n = 0; n <= bounds[0]; ++n)
            for (int m = 0; m <= bounds[1]; ++m)
                for (int h = 0; h <= bounds[2]; ++h) {
                    if (sgn(ext.coeff(n, m, h)) == 0)
                        continue;
                    CHECK(h <= std::min(n, m));
                    min_n = std::min(min_n, n);
                    min_m = std::min(min_m, m);
                    min_h = std::min(min_h, h);
                }
        CHECK(min_n == params.tau);
        CHECK(min_m == params.tau);
        CHECK(min_h == params.tau);
    }
}

TEST_CASE("stem series assembled two ways") {
    // sequence constructions against the closed-form division
    // (z^2/(1-z^2)) / (1 - (z^2/(1-z^2)) (T^2 - 1))
    const int n = 20;
    for (int sigma = 1; sigma <= 3; ++sigma)
        for (int lambda = 1; lambda <= 2; ++lambda) {
            const auto t = secondary_gf(sigma, lambda, n);
            const auto one = UnivariateSeries::one(n);
            const auto z2 = UnivariateSeries::monomial(Rational(1), 2, n);
            const auto stack = div(UnivariateSeries::monomial(Rational(1), 2 * sigma, n),
                                   one - z2);
            const auto closed_form = div(stack, one - stack * (t * t - one));
            CHECK(interior_stem_gf(sigma, lambda, n) == closed_form);
        }
}

TEST_CASE("composition precondition") {
    try {
        build_inflation({1, 1, 4}, {4, 4, 4});
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("lambda <= tau + 1 violated") != std::string::npos);
    }
    CHECK_THROWS_AS(joint_gf({2, 1, 3}, {4, 4, 4}), PreconditionError);
    CHECK_THROWS_AS(joint_total_gf({2, 1, 2}, 8), PreconditionError);   // sigma != tau
    CHECK_THROWS_AS(joint_total_gf({1, 1, 3}, 8), PreconditionError);   // lambda > sigma + 1
}

TEST_CASE("trivariate counts against the enumerator") {
    const TrivariateSeries::Bounds bounds{8, 8, 4};
    for (const StructureParams params :
         {StructureParams{1, 1, 2}, StructureParams{2, 2, 2}, StructureParams{1, 1, 1},
          StructureParams{2, 2, 3}, StructureParams{1, 2, 2}, StructureParams{2, 1, 2},
          StructureParams{1, 3, 2}, StructureParams{3, 3, 4}}) {
        const auto gf = joint_gf(params, bounds);
        CAPTURE(params.sigma);
        CAPTURE(params.tau);
        CAPTURE(params.lambda);
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; n + m <= 8; ++m) {
                const auto counts = count_joint_structures(n, m, params);
                for (int h = 0; h <= bounds[2]; ++h) {
                    const auto it = counts.find(h);
                    const std::uint64_t brute = it == counts.end() ? 0 : it->second;
                    CHECK(gf.coeff(n, m, h) == Rational(static_cast<unsigned long>(brute)));
                }
            }
    }
}

TEST_CASE("structural properties of the trivariate series") {
    const TrivariateSeries::Bounds bounds{7, 7, 4};
    const StructureParams params{1, 1, 2};
    const auto gf = joint_gf(params, bounds);

    CHECK(gf.coeff(1, 1, 1) == Rational(1));

    // exterior arcs consume one vertex per row
    for (int n = 0; n <= bounds[0]; ++n)
        for (int m = 0; m <= bounds[1]; ++m)
            for (int h = 0; h <= bounds[2]; ++h)
                if (h > std::min(n, m))
                    CHECK(gf.coeff(n, m, h) == Rational(0));

    // top-bottom symmetry for sigma == tau
    for (int n = 0; n <= bounds[0]; ++n)
        for (int m = 0; m <= bounds[1]; ++m)
            for (int h = 0; h <= bounds[2]; ++h)
                CHECK(gf.coeff(n, m, h) == gf.coeff(m, n, h));

    // the no-exterior-arc slice factors into two secondary rows
    const auto t = secondary_gf(params.sigma, params.lambda, 7);
    for (int n = 0; n <= bounds[0]; ++n)
        for (int m = 0; m <= bounds[1]; ++m)
            CHECK(gf.coeff(n, m, 0) == t.coeff(n) * t.coeff(m));
}

TEST_CASE("asymmetric boxes truncate consistently") {
    const StructureParams params{1, 1, 2};
    const auto wide = joint_gf(params, {8, 8, 4});
    const auto narrow = joint_gf(params, {6, 3, 2});
    CHECK(wide.truncated({6, 3, 2}) == narrow);
}

TEST_CASE("univariate counting series") {
    const auto j1 = joint_total_gf({1, 1, 2}, 12);
    CHECK(j1.coeff(0) == Rational(1));
    CHECK(testsupport::low_coeffs(j1, 13) ==
          std::vector<long>{1, 2, 4, 10, 26, 70, 194, 550, 1590, 4674, 13940, 42106, 128610});

    const auto j2 = joint_total_gf({2, 2, 2}, 12);
    CHECK(testsupport::low_coeffs(j2, 13) ==
          std::vector<long>{1, 2, 3, 4, 6, 12, 26, 54, 105, 200, 389, 780, 1589});
}

TEST_CASE("total count is the diagonal of the trivariate series") {
    const TrivariateSeries::Bounds bounds{12, 12, 6};
    for (int sigma = 1; sigma <= 2; ++sigma) {
        StructureParams params;
        params.sigma = params.tau = sigma;
        const auto gf = joint_gf(params, bounds);
        const auto total = joint_total_gf(params, 12);
        for (int s = 0; s <= 12; ++s) {
            Rational sum(0);
            for (int n = 0; n <= s; ++n)
                for (int h = 0; h <= bounds[2]; ++h)
                    if (s - n <= bounds[1])
                        sum += gf.coeff(n, s - n, h);
            CHECK(sum == total.coeff(s));
        }
    }
}

TEST_CASE("recurrence coefficients") {
    for (int sigma = 1; sigma <= 3; ++sigma) {
        const auto r = joint_recurrence(sigma, 16);
        CHECK(r.a[0] == 0);
        CHECK(r.b[0] == -1);
        // the constant-coefficient polynomial carries the squared secondary
        // series; its own constant term seeds the recurrence at 1
        CHECK(r.c[0] == 1);
    }
    // for sigma = 1 the prefactor collapses and c is exactly T^2
    const auto r1 = joint_recurrence(1, 10);
    const auto t = secondary_counts(1, 2, 10);
    const auto t2 = convolve(t, t);
    CHECK(r1.c == t2);
}

TEST_CASE("recurrence reproduces the counting table") {
    const auto j1 = joint_counts_by_recurrence(1, 12);
    CHECK((std::vector<Integer>(j1.begin() + 1, j1.end()) ==
           std::vector<Integer>{2, 4, 10, 26, 70, 194, 550, 1590, 4674, 13940, 42106, 128610}));
    const auto j2 = joint_counts_by_recurrence(2, 12);
    CHECK((std::vector<Integer>(j2.begin() + 1, j2.end()) ==
           std::vector<Integer>{2, 3, 4, 6, 12, 26, 54, 105, 200, 389, 780, 1589}));
}

TEST_CASE("recurrence and composition agree to high order") {
    for (int sigma = 1; sigma <= 2; ++sigma) {
        StructureParams params;
        params.sigma = params.tau = sigma;
        const auto series = joint_total_gf(params, 200);
        const auto rec = joint_counts_by_recurrence(sigma, 200);
        for (int s = 0; s <= 200; ++s)
            CHECK(series.coeff(s) == Rational(rec[static_cast<std::size_t>(s)]));
    }
    // the generalized arc-length case goes through the same equation
    {
        StructureParams params{2, 2, 3};
        const auto series = joint_total_gf(params, 60);
        const auto rec = joint_counts_by_recurrence(2, 60, 3);
        for (int s = 0; s <= 60; ++s)
            CHECK(series.coeff(s) == Rational(rec[static_cast<std::size_t>(s)]));
    }
}

TEST_CASE("functional-equation residual vanishes") {
    for (int sigma = 1; sigma <= 3; ++sigma) {
        const int order = 200;
        const auto r = joint_recurrence(sigma, order);
        const auto counts = joint_counts_by_recurrence(sigma, order);
        auto to_series = [order](const std::vector<Integer>& v) {
            UnivariateSeries s(order);
            for (int k = 0; k <= order; ++k)
                s.set_coeff(k, Rational(v[static_cast<std::size_t>(k)]));
            return s;
        };
        const auto a = to_series(r.a);
        const auto b = to_series(r.b);
        const auto c = to_series(r.c);
        const auto j = to_series(counts);
        CHECK((a * (j * j) + b * j + c).is_zero());
    }
}

TEST_SUITE_END();
