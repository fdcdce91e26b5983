#pragma once

#include <vector>

#include "jointgf/rational.hpp"
#include "jointgf/real.hpp"

namespace jointgf {

// Truncated power series in one variable over exact rationals. A series of
// order N stores the coefficients of z^0..z^N. Operations are
// truncation-stable: coefficient k of any result depends only on
// coefficients 0..k of the inputs, so computing at a high order and
// truncating equals computing at the low order directly.
class UnivariateSeries {
public:
    // the zero series of the given order
    explicit UnivariateSeries(int order);

    static UnivariateSeries constant(const Rational& c, int order);
    static UnivariateSeries one(int order);
    static UnivariateSeries monomial(const Rational& c, int degree, int order);
    // series with the given low-order coefficients, zero-padded
    static UnivariateSeries polynomial(const std::vector<Rational>& coeffs, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, Rational value);
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // index of the first nonzero coefficient; order()+1 for the zero series
    int valuation() const;

    UnivariateSeries truncated(int new_order) const;
    // multiplication by z^k (coefficients above the order fall off)
    UnivariateSeries shifted(int k) const;

    // Exact coefficients as integers; throws PreconditionError if any
    // coefficient has a denominator.
    std::vector<Integer> integer_coeffs() const;

    // Horner evaluation of the truncated polynomial.
    Real evaluate(const Real& x) const;

    bool operator==(const UnivariateSeries& other) const;
    bool operator!=(const UnivariateSeries& other) const { return !(*this == other); }

private:
    std::vector<Rational> coeffs_;
};

// All binary operations require equal orders and throw PreconditionError
// ("equal truncation orders violated") otherwise.
UnivariateSeries operator+(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries operator-(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries operator-(const UnivariateSeries& a);
UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b);
UnivariateSeries operator*(const Rational& c, const UnivariateSeries& a);

// Quotient q with q*b == a up to truncation. b needs a nonzero constant
// term; alternatively, if b has valuation v > 0 and a has valuation >= v,
// the common factor z^v is cancelled exactly and the result has order
// a.order() - v.
UnivariateSeries div(const UnivariateSeries& a, const UnivariateSeries& b);

// Reciprocal of a series with nonzero constant term.
UnivariateSeries inverse(const UnivariateSeries& b);

// Square root branch with positive constant term. The constant term must be
// the square of a rational and nonzero (a vanishing constant term is
// unsupported; no caller needs it).
UnivariateSeries sqrt(const UnivariateSeries& a);

// outer(inner(z)) for inner with zero constant term; equal orders required.
UnivariateSeries compose(const UnivariateSeries& outer, const UnivariateSeries& inner);

// 1/(1-a) for a with zero constant term (the sequence construction).
UnivariateSeries sequence(const UnivariateSeries& a);

// Coefficient-wise derivative; the result has order a.order()-1.
UnivariateSeries derivative(const UnivariateSeries& a);

// The unique power-series solution f of A f^2 + B f + C = 0 with f(0) = f0.
// f0 must be a root of the constant-term quadratic, and the extraction must
// be well-posed: B(0) + 2 A(0) f0 != 0. Solved by a fixed-point iteration on
// series; no radical is taken, the branch is fixed by f0 alone.
UnivariateSeries solve_quadratic(const UnivariateSeries& A,
                                 const UnivariateSeries& B,
                                 const UnivariateSeries& C,
                                 const Rational& f0);

} // namespace jointgf
