#include "jointgf/trivariate_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "jointgf/errors.hpp"

namespace jointgf {

namespace {

void require_equal_bounds(const TrivariateSeries& a, const TrivariateSeries& b) {
    if (a.bounds() != b.bounds())
        throw PreconditionError("equal truncation bounds violated");
}

struct Entry {
    int n, m, h;
    const Rational* value;
};

std::vector<Entry> nonzero_entries(const TrivariateSeries& s) {
    std::vector<Entry> entries;
    const auto& b = s.bounds();
    for (int n = 0; n <= b[0]; ++n)
        for (int m = 0; m <= b[1]; ++m)
            for (int h = 0; h <= b[2]; ++h) {
                const Rational& c = s.coeff(n, m, h);
                if (sgn(c) != 0)
                    entries.push_back({n, m, h, &c});
            }
    return entries;
}

} // namespace

TrivariateSeries::TrivariateSeries(const Bounds& bounds) : bounds_(bounds) {
    for (int b : bounds_)
        if (b < 0)
            throw PreconditionError("bounds >= 0 violated");
    coeffs_.assign(static_cast<std::size_t>(bounds_[0] + 1) *
                       static_cast<std::size_t>(bounds_[1] + 1) *
                       static_cast<std::size_t>(bounds_[2] + 1),
                   Rational(0));
}

std::size_t TrivariateSeries::index(int n, int m, int h) const {
    return (static_cast<std::size_t>(n) * static_cast<std::size_t>(bounds_[1] + 1) +
            static_cast<std::size_t>(m)) *
               static_cast<std::size_t>(bounds_[2] + 1) +
           static_cast<std::size_t>(h);
}

TrivariateSeries TrivariateSeries::constant(const Rational& c, const Bounds& bounds) {
    TrivariateSeries s(bounds);
    s.coeffs_[0] = c;
    return s;
}

TrivariateSeries TrivariateSeries::one(const Bounds& bounds) {
    return constant(Rational(1), bounds);
}

TrivariateSeries TrivariateSeries::monomial(const Rational& c, int dx, int dy, int dz,
                                            const Bounds& bounds) {
    if (dx < 0 || dy < 0 || dz < 0)
        throw PreconditionError("degrees >= 0 violated");
    TrivariateSeries s(bounds);
    if (dx <= bounds[0] && dy <= bounds[1] && dz <= bounds[2])
        s.coeffs_[s.index(dx, dy, dz)] = c;
    return s;
}

TrivariateSeries TrivariateSeries::from_univariate(const UnivariateSeries& s, int variable,
                                                   const Bounds& bounds) {
    if (variable < 0 || variable > 2)
        throw PreconditionError("variable in {0,1,2} violated");
    TrivariateSeries r(bounds);
    const int limit = std::min(s.order(), bounds[variable]);
    for (int k = 0; k <= limit; ++k) {
        const Rational& c = s.coeff(k);
        if (sgn(c) == 0)
            continue;
        int idx[3] = {0, 0, 0};
        idx[variable] = k;
        r.set_coeff(idx[0], idx[1], idx[2], c);
    }
    return r;
}

const Rational& TrivariateSeries::coeff(int n, int m, int h) const {
    if (n < 0 || n > bounds_[0] || m < 0 || m > bounds_[1] || h < 0 || h > bounds_[2])
        throw std::out_of_range("coefficient index outside the truncation box");
    return coeffs_[index(n, m, h)];
}

void TrivariateSeries::set_coeff(int n, int m, int h, Rational value) {
    if (n < 0 || n > bounds_[0] || m < 0 || m > bounds_[1] || h < 0 || h > bounds_[2])
        throw std::out_of_range("coefficient index outside the truncation box");
    coeffs_[index(n, m, h)] = std::move(value);
}

bool TrivariateSeries::is_zero() const {
    for (const Rational& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

TrivariateSeries TrivariateSeries::truncated(const Bounds& new_bounds) const {
    TrivariateSeries r(new_bounds);
    for (int n = 0; n <= std::min(bounds_[0], new_bounds[0]); ++n)
        for (int m = 0; m <= std::min(bounds_[1], new_bounds[1]); ++m)
            for (int h = 0; h <= std::min(bounds_[2], new_bounds[2]); ++h)
                r.set_coeff(n, m, h, coeff(n, m, h));
    return r;
}

UnivariateSeries TrivariateSeries::diagonal(int order) const {
    UnivariateSeries d(order);
    for (int n = 0; n <= bounds_[0]; ++n)
        for (int m = 0; m <= bounds_[1]; ++m)
            for (int h = 0; h <= bounds_[2]; ++h) {
                const int l = n + m + h;
                if (l <= order && sgn(coeff(n, m, h)) != 0)
                    d.set_coeff(l, d.coeff(l) + coeff(n, m, h));
            }
    return d;
}

bool TrivariateSeries::operator==(const TrivariateSeries& other) const {
    if (bounds_ != other.bounds_)
        return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != other.coeffs_[i])
            return false;
    return true;
}

TrivariateSeries operator+(const TrivariateSeries& a, const TrivariateSeries& b) {
    require_equal_bounds(a, b);
    TrivariateSeries r(a.bounds());
    const auto& bd = a.bounds();
    for (int n = 0; n <= bd[0]; ++n)
        for (int m = 0; m <= bd[1]; ++m)
            for (int h = 0; h <= bd[2]; ++h)
                r.set_coeff(n, m, h, a.coeff(n, m, h) + b.coeff(n, m, h));
    return r;
}

TrivariateSeries operator-(const TrivariateSeries& a, const TrivariateSeries& b) {
    require_equal_bounds(a, b);
    TrivariateSeries r(a.bounds());
    const auto& bd = a.bounds();
    for (int n = 0; n <= bd[0]; ++n)
        for (int m = 0; m <= bd[1]; ++m)
            for (int h = 0; h <= bd[2]; ++h)
                r.set_coeff(n, m, h, a.coeff(n, m, h) - b.coeff(n, m, h));
    return r;
}

TrivariateSeries operator-(const TrivariateSeries& a) {
    TrivariateSeries r(a.bounds());
    const auto& bd = a.bounds();
    for (int n = 0; n <= bd[0]; ++n)
        for (int m = 0; m <= bd[1]; ++m)
            for (int h = 0; h <= bd[2]; ++h)
                r.set_coeff(n, m, h, -a.coeff(n, m, h));
    return r;
}

TrivariateSeries operator*(const TrivariateSeries& a, const TrivariateSeries& b) {
    require_equal_bounds(a, b);
    const auto& bd = a.bounds();
    TrivariateSeries r(bd);
    const auto ae = nonzero_entries(a);
    const auto be = nonzero_entries(b);
    for (const Entry& ea : ae)
        for (const Entry& eb : be) {
            const int n = ea.n + eb.n;
            if (n > bd[0])
                continue;
            const int m = ea.m + eb.m;
            if (m > bd[1])
                continue;
            const int h = ea.h + eb.h;
            if (h > bd[2])
                continue;
            r.set_coeff(n, m, h, r.coeff(n, m, h) + *ea.value * *eb.value);
        }
    return r;
}

TrivariateSeries operator*(const Rational& c, const TrivariateSeries& a) {
    TrivariateSeries r(a.bounds());
    if (sgn(c) == 0)
        return r;
    const auto& bd = a.bounds();
    for (int n = 0; n <= bd[0]; ++n)
        for (int m = 0; m <= bd[1]; ++m)
            for (int h = 0; h <= bd[2]; ++h)
                r.set_coeff(n, m, h, c * a.coeff(n, m, h));
    return r;
}

TrivariateSeries inverse(const TrivariateSeries& b) {
    const Rational c0 = b.constant_term();
    if (sgn(c0) == 0)
        throw PreconditionError("nonzero constant term violated (inverse)");
    // b = c0 (1 - e) with e of positive valuation, so 1/b = Seq(e)/c0
    TrivariateSeries e = TrivariateSeries::one(b.bounds()) - (Rational(1) / c0) * b;
    return (Rational(1) / c0) * sequence(e);
}

TrivariateSeries sequence(const TrivariateSeries& a) {
    if (sgn(a.constant_term()) != 0)
        throw PreconditionError(
            "zero constant term violated (sequence of a class with an empty object)");
    const auto& bd = a.bounds();
    const int total = bd[0] + bd[1] + bd[2];
    TrivariateSeries s = TrivariateSeries::one(bd);
    // S = 1 + a S gains at least one order of total degree per pass
    for (int pass = 0; pass <= total + 1; ++pass) {
        TrivariateSeries next = TrivariateSeries::one(bd) + a * s;
        if (next == s)
            break;
        s = std::move(next);
    }
    return s;
}

TrivariateSeries solve_quadratic(const TrivariateSeries& A,
                                 const TrivariateSeries& B,
                                 const TrivariateSeries& C,
                                 const Rational& f0) {
    require_equal_bounds(A, B);
    require_equal_bounds(A, C);
    const auto& bd = A.bounds();

    TrivariateSeries e = B + (Rational(2) * f0) * A;
    if (sgn(e.constant_term()) == 0)
        throw PreconditionError(
            "degenerate extraction: B(0) + 2 A(0) f0 != 0 violated");
    TrivariateSeries r0 = (f0 * f0) * A + f0 * B + C;
    if (sgn(r0.constant_term()) != 0)
        throw PreconditionError(
            "f0 is not a root of the constant-term quadratic (root selection)");

    const TrivariateSeries e_inv = inverse(e);
    const int total = bd[0] + bd[1] + bd[2];
    TrivariateSeries g(bd);
    for (int pass = 0; pass <= total + 1; ++pass) {
        TrivariateSeries next = -(r0 + A * (g * g)) * e_inv;
        if (next == g)
            break;
        g = std::move(next);
    }
    g.set_coeff(0, 0, 0, g.coeff(0, 0, 0) + f0);
    return g;
}

} // namespace jointgf
