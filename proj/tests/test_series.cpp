#include <doctest.h>

#include <random>

#include "jointgf/errors.hpp"
#include "jointgf/oracle.hpp"
#include "jointgf/univariate_series.hpp"

#include "support.hpp"

using namespace jointgf;
using testsupport::matchings_with_arcs;
using testsupport::random_series;
using testsupport::schoolbook_div;

namespace {

UnivariateSeries poly(std::vector<long> cs, int order) {
    std::vector<Rational> rs;
    rs.reserve(cs.size());
    for (long c : cs)
        rs.emplace_back(c);
    return UnivariateSeries::polynomial(rs, order);
}

} // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("addition") {
    const auto a = poly({1, 1}, 4);
    const auto b = poly({1, -1}, 4);
    CHECK(a + b == poly({2}, 4));
    CHECK(a + UnivariateSeries(4) == a);

    // doubled secondary-structure counts, against the exhaustive enumerator
    UnivariateSeries t(5);
    for (int n = 0; n <= 5; ++n)
        t.set_coeff(n, Rational(static_cast<unsigned long>(count_secondary_structures(n, 1, 2))));
    const auto doubled = t + t;
    CHECK(testsupport::low_coeffs(doubled, 6) == std::vector<long>{2, 2, 2, 4, 8, 16});

    CHECK_THROWS_AS(poly({1}, 3) + poly({1}, 4), PreconditionError);
}

TEST_CASE("multiplication") {
    CHECK(poly({1, 1}, 5) * poly({1, -1}, 5) == poly({1, 0, -1}, 5));
    const auto a = poly({3, -2, 5}, 5);
    CHECK(a * UnivariateSeries::one(5) == a);

    // [z^n] F^2 = Catalan(n+1), against brute-force matching enumeration
    const auto f = noncrossing_matching_gf(4);
    const auto fsq = f * f;
    for (int n = 0; n <= 4; ++n)
        CHECK(fsq.coeff(n) == Rational(static_cast<unsigned long>(matchings_with_arcs(n + 1))));

    CHECK_THROWS_AS(poly({1}, 3) * poly({1}, 4), PreconditionError);
}

TEST_CASE("multiplication commutes") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 12);
        const auto b = random_series(rng, 12);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("division") {
    CHECK(div(poly({1, 0, -1}, 6), poly({1, -1}, 6)) == poly({1, 1}, 6));

    // valuation cancellation: (2z + z^2) / z, order drops by the valuation
    const auto q = div(poly({0, 2, 1}, 6), poly({0, 1}, 6));
    CHECK(q.order() == 5);
    CHECK(q == poly({2, 1}, 5));

    // z^2 / (z^4 - z^2 + 1) against the schoolbook long-division oracle
    const auto numerator = UnivariateSeries::monomial(Rational(1), 2, 8);
    const auto denominator = poly({1, 0, -1, 0, 1}, 8);
    const auto expansion = div(numerator, denominator);
    CHECK(expansion == schoolbook_div(numerator, denominator));
    CHECK(testsupport::low_coeffs(expansion, 9) ==
          std::vector<long>{0, 0, 1, 0, 1, 0, 0, 0, -1});

    CHECK_THROWS_AS(div(poly({1, 1}, 4), poly({0, 1}, 4)), PreconditionError);
}

TEST_CASE("division inverts multiplication") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_series(rng, 10);
        auto b = random_series(rng, 10);
        if (sgn(b.coeff(0)) == 0)
            b.set_coeff(0, Rational(1));
        CHECK(div(a, b) * b == a);
    }
}

TEST_CASE("square root") {
    CHECK(sqrt(poly({1, 2, 1}, 6)) == poly({1, 1}, 6));

    const auto radicand = poly({1, -4}, 8);
    const auto root = sqrt(radicand);
    CHECK(root * root == radicand);

    // coefficients of (1 - sqrt(1-4z)) / (2z) against matching enumeration
    const auto f = noncrossing_matching_gf(5);
    CHECK(testsupport::low_coeffs(f, 6) == std::vector<long>{1, 1, 2, 5, 14, 42});

    CHECK_THROWS_AS(sqrt(poly({2}, 4)), PreconditionError);
    CHECK_THROWS_AS(sqrt(poly({0, 1}, 4)), PreconditionError);
}

TEST_CASE("square root squares back") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_series(rng, 10);
        a.set_coeff(0, Rational(1));
        const auto r = sqrt(a);
        CHECK(r * r == a);
        CHECK(r.coeff(0) == Rational(1));
    }
}

TEST_CASE("composition") {
    // 1/(1-z) composed with z^2
    const auto outer = sequence(UnivariateSeries::monomial(Rational(1), 1, 8));
    const auto inner = UnivariateSeries::monomial(Rational(1), 2, 8);
    CHECK(compose(outer, inner) == poly({1, 0, 1, 0, 1, 0, 1, 0, 1}, 8));

    const auto identity = UnivariateSeries::monomial(Rational(1), 1, 8);
    const auto arbitrary = poly({5, -1, 3, 0, 7}, 8);
    CHECK(compose(arbitrary, identity) == arbitrary);

    CHECK_THROWS_AS(compose(outer, UnivariateSeries::one(8)), PreconditionError);
}

TEST_CASE("sequence construction") {
    CHECK(sequence(UnivariateSeries::monomial(Rational(1), 1, 5)) ==
          poly({1, 1, 1, 1, 1, 1}, 5));
    CHECK(sequence(UnivariateSeries(5)) == UnivariateSeries::one(5));
    CHECK(sequence(UnivariateSeries::monomial(Rational(1), 2, 7)) ==
          poly({1, 0, 1, 0, 1, 0, 1, 0}, 7));
    CHECK_THROWS_AS(sequence(UnivariateSeries::one(5)), PreconditionError);
}

TEST_CASE("quadratic solve") {
    const int n = 10;
    // z f^2 - f + 1 = 0: noncrossing matchings by arcs
    const auto catalan = solve_quadratic(UnivariateSeries::monomial(Rational(1), 1, n),
                                         UnivariateSeries::constant(Rational(-1), n),
                                         UnivariateSeries::one(n), Rational(1));
    for (int k = 0; k <= 6; ++k)
        CHECK(catalan.coeff(k) == Rational(static_cast<unsigned long>(matchings_with_arcs(k))));

    // degenerate linear case
    CHECK(solve_quadratic(UnivariateSeries(n), UnivariateSeries::constant(Rational(-1), n),
                          poly({1, 1}, n), Rational(1)) == poly({1, 1}, n));

    // the shape-by-arcs equation
    const auto u = solve_quadratic(poly({0, 2, 1}, n), poly({-1, -3, -1}, n),
                                   poly({1, 2, 1}, n), Rational(1));
    CHECK(testsupport::low_coeffs(u, 4) == std::vector<long>{1, 1, 2, 5});
    const auto brute = count_shapes(3);
    std::vector<long> totals(4, 0);
    for (const auto& [key, count] : brute)
        totals[static_cast<std::size_t>(key[0] + key[1] + key[2])] +=
            static_cast<long>(count);
    CHECK(testsupport::low_coeffs(u, 4) == totals);

    CHECK_THROWS_AS(solve_quadratic(UnivariateSeries(n), UnivariateSeries::constant(Rational(-1), n),
                                    UnivariateSeries::one(n), Rational(2)),
                    PreconditionError);  // f0 not a root
    CHECK_THROWS_AS(solve_quadratic(UnivariateSeries::monomial(Rational(1), 1, n),
                                    UnivariateSeries(n), UnivariateSeries(n), Rational(0)),
                    PreconditionError);  // degenerate extraction
}

TEST_CASE("quadratic solve recovers a planted root") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 9;
        auto f = random_series(rng, n);
        f.set_coeff(0, Rational(1));
        auto a = random_series(rng, n);
        auto b = random_series(rng, n);
        b.set_coeff(0, Rational(-1) - Rational(2) * a.coeff(0));  // keep extraction well-posed
        const auto c = -(a * (f * f) + b * f);
        const auto solved = solve_quadratic(a, b, c, Rational(1));
        CHECK(solved == f);
        CHECK((a * (solved * solved) + b * solved + c).is_zero());
    }
}

TEST_CASE("truncation stability") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 30; ++trial) {
        const int big = 14, small = 6;
        auto a = random_series(rng, big);
        auto b = random_series(rng, big);
        b.set_coeff(0, Rational(1));
        a.set_coeff(0, Rational(1));
        CHECK((a * b).truncated(small) == a.truncated(small) * b.truncated(small));
        CHECK(div(a, b).truncated(small) == div(a.truncated(small), b.truncated(small)));
        CHECK(sqrt(a).truncated(small) == sqrt(a.truncated(small)));
        auto v = a;
        v.set_coeff(0, Rational(0));
        CHECK(sequence(v).truncated(small) == sequence(v.truncated(small)));
    }
}

TEST_SUITE_END();
