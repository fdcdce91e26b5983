#pragma once

#include <array>
#include <vector>

#include "jointgf/rational.hpp"
#include "jointgf/univariate_series.hpp"

namespace jointgf {

// Truncated power series in (x, y, z) over exact rationals with box
// truncation: independent inclusive bounds per variable, 0..N x 0..M x 0..H.
// Absent cells are zero; the joint-structure series satisfy h <= min(n, m).
class TrivariateSeries {
public:
    using Bounds = std::array<int, 3>;

    explicit TrivariateSeries(const Bounds& bounds);

    static TrivariateSeries constant(const Rational& c, const Bounds& bounds);
    static TrivariateSeries one(const Bounds& bounds);
    static TrivariateSeries monomial(const Rational& c, int dx, int dy, int dz,
                                     const Bounds& bounds);
    // embed a univariate series as a series in variable 0 (x), 1 (y) or 2 (z)
    static TrivariateSeries from_univariate(const UnivariateSeries& s, int variable,
                                            const Bounds& bounds);

    const Bounds& bounds() const { return bounds_; }
    const Rational& coeff(int n, int m, int h) const;
    void set_coeff(int n, int m, int h, Rational value);

    bool is_zero() const;
    Rational constant_term() const { return coeff(0, 0, 0); }

    TrivariateSeries truncated(const Bounds& new_bounds) const;

    // sum of all coefficients with n+m+h == l, for l = 0..order; the
    // diagonal specialization x = y = z.
    UnivariateSeries diagonal(int order) const;

    bool operator==(const TrivariateSeries& other) const;
    bool operator!=(const TrivariateSeries& other) const { return !(*this == other); }

private:
    std::size_t index(int n, int m, int h) const;

    Bounds bounds_;
    std::vector<Rational> coeffs_;
};

// Binary operations require identical bounds.
TrivariateSeries operator+(const TrivariateSeries& a, const TrivariateSeries& b);
TrivariateSeries operator-(const TrivariateSeries& a, const TrivariateSeries& b);
TrivariateSeries operator-(const TrivariateSeries& a);
TrivariateSeries operator*(const TrivariateSeries& a, const TrivariateSeries& b);
TrivariateSeries operator*(const Rational& c, const TrivariateSeries& a);

// Reciprocal of a series with nonzero constant term.
TrivariateSeries inverse(const TrivariateSeries& b);

// 1/(1-a) for a with zero constant term.
TrivariateSeries sequence(const TrivariateSeries& a);

// The unique solution of A f^2 + B f + C = 0 with constant term f0; same
// preconditions and iteration as the univariate solver.
TrivariateSeries solve_quadratic(const TrivariateSeries& A,
                                 const TrivariateSeries& B,
                                 const TrivariateSeries& C,
                                 const Rational& f0);

} // namespace jointgf
