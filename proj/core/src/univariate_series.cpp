#include "jointgf/univariate_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "jointgf/errors.hpp"

namespace jointgf {

namespace {

void require_equal_orders(const UnivariateSeries& a, const UnivariateSeries& b) {
    if (a.order() != b.order())
        throw PreconditionError("equal truncation orders violated (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
}

void require_valid_order(int order) {
    if (order < 0)
        throw PreconditionError("order >= 0 violated");
}

} // namespace

UnivariateSeries::UnivariateSeries(int order) {
    require_valid_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

UnivariateSeries UnivariateSeries::constant(const Rational& c, int order) {
    UnivariateSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

UnivariateSeries UnivariateSeries::one(int order) {
    return constant(Rational(1), order);
}

UnivariateSeries UnivariateSeries::monomial(const Rational& c, int degree, int order) {
    if (degree < 0)
        throw PreconditionError("degree >= 0 violated");
    UnivariateSeries s(order);
    if (degree <= order)
        s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

UnivariateSeries UnivariateSeries::polynomial(const std::vector<Rational>& coeffs, int order) {
    UnivariateSeries s(order);
    const std::size_t n = std::min(coeffs.size(), s.coeffs_.size());
    for (std::size_t k = 0; k < n; ++k)
        s.coeffs_[k] = coeffs[k];
    return s;
}

const Rational& UnivariateSeries::coeff(int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void UnivariateSeries::set_coeff(int k, Rational value) {
    if (k < 0 || k > order())
        throw std::out_of_range("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

bool UnivariateSeries::is_zero() const {
    for (const Rational& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

int UnivariateSeries::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0)
            return static_cast<int>(k);
    return order() + 1;
}

UnivariateSeries UnivariateSeries::truncated(int new_order) const {
    require_valid_order(new_order);
    UnivariateSeries s(new_order);
    const int n = std::min(new_order, order());
    for (int k = 0; k <= n; ++k)
        s.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return s;
}

UnivariateSeries UnivariateSeries::shifted(int k) const {
    if (k < 0)
        throw PreconditionError("shift >= 0 violated");
    UnivariateSeries s(order());
    for (int i = 0; i + k <= order(); ++i)
        s.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
}

std::vector<Integer> UnivariateSeries::integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) {
        if (!is_integral(c))
            throw PreconditionError("integral coefficients violated (found " +
                                    rational_to_string(c) + ")");
        out.push_back(c.get_num());
    }
    return out;
}

Real UnivariateSeries::evaluate(const Real& x) const {
    Real acc(0);
    for (int k = order(); k >= 0; --k) {
        acc *= x;
        acc += to_real(coeffs_[static_cast<std::size_t>(k)]);
    }
    return acc;
}

bool UnivariateSeries::operator==(const UnivariateSeries& other) const {
    if (coeffs_.size() != other.coeffs_.size())
        return false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != other.coeffs_[k])
            return false;
    return true;
}

UnivariateSeries operator+(const UnivariateSeries& a, const UnivariateSeries& b) {
    require_equal_orders(a, b);
    UnivariateSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

UnivariateSeries operator-(const UnivariateSeries& a, const UnivariateSeries& b) {
    require_equal_orders(a, b);
    UnivariateSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

UnivariateSeries operator-(const UnivariateSeries& a) {
    UnivariateSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r.set_coeff(k, -a.coeff(k));
    return r;
}

UnivariateSeries operator*(const UnivariateSeries& a, const UnivariateSeries& b) {
    require_equal_orders(a, b);
    const int n = a.order();
    UnivariateSeries r(n);
    for (int i = 0; i <= n; ++i) {
        const Rational& ai = a.coeff(i);
        if (sgn(ai) == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            const Rational& bj = b.coeff(j);
            if (sgn(bj) == 0)
                continue;
            r.set_coeff(i + j, r.coeff(i + j) + ai * bj);
        }
    }
    return r;
}

UnivariateSeries operator*(const Rational& c, const UnivariateSeries& a) {
    UnivariateSeries r(a.order());
    if (sgn(c) == 0)
        return r;
    for (int k = 0; k <= a.order(); ++k)
        r.set_coeff(k, c * a.coeff(k));
    return r;
}

UnivariateSeries div(const UnivariateSeries& a, const UnivariateSeries& b) {
    require_equal_orders(a, b);
    const int vb = b.valuation();
    if (vb > b.order())
        throw PreconditionError("division by the zero series");
    if (vb > 0) {
        // cancel the common z^vb factor exactly
        if (!a.is_zero() && a.valuation() < vb)
            throw PreconditionError(
                "valuation(a) >= valuation(b) violated (a has valuation " +
                std::to_string(a.valuation()) + ", b has valuation " +
                std::to_string(vb) + ")");
        const int n = a.order() - vb;
        UnivariateSeries as(n), bs(n);
        for (int k = 0; k <= n; ++k) {
            as.set_coeff(k, a.coeff(k + vb));
            bs.set_coeff(k, b.coeff(k + vb));
        }
        return div(as, bs);
    }
    // long division against an invertible constant term
    const int n = a.order();
    UnivariateSeries q(n);
    for (int k = 0; k <= n; ++k) {
        Rational s = a.coeff(k);
        for (int i = 1; i <= k; ++i) {
            const Rational& bi = b.coeff(i);
            if (sgn(bi) != 0)
                s -= bi * q.coeff(k - i);
        }
        q.set_coeff(k, s / b.coeff(0));
    }
    return q;
}

UnivariateSeries inverse(const UnivariateSeries& b) {
    if (sgn(b.coeff(0)) == 0)
        throw PreconditionError("nonzero constant term violated (inverse)");
    return div(UnivariateSeries::one(b.order()), b);
}

UnivariateSeries sqrt(const UnivariateSeries& a) {
    if (sgn(a.coeff(0)) == 0)
        throw PreconditionError(
            "sqrt of a series with zero constant term is unsupported");
    Rational r0;
    if (!rational_sqrt(a.coeff(0), r0))
        throw PreconditionError("constant term is not the square of a rational (" +
                                rational_to_string(a.coeff(0)) + ")");
    const int n = a.order();
    UnivariateSeries r(n);
    r.set_coeff(0, r0);
    const Rational two_r0 = Rational(2) * r0;
    for (int k = 1; k <= n; ++k) {
        Rational s = a.coeff(k);
        for (int i = 1; i < k; ++i)
            s -= r.coeff(i) * r.coeff(k - i);
        r.set_coeff(k, s / two_r0);
    }
    return r;
}

UnivariateSeries compose(const UnivariateSeries& outer, const UnivariateSeries& inner) {
    require_equal_orders(outer, inner);
    if (sgn(inner.coeff(0)) != 0)
        throw PreconditionError(
            "zero constant term of the inner series violated (composition)");
    const int n = outer.order();
    UnivariateSeries acc(n);
    for (int k = n; k >= 0; --k) {
        acc = acc * inner;
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
    }
    return acc;
}

UnivariateSeries sequence(const UnivariateSeries& a) {
    if (sgn(a.coeff(0)) != 0)
        throw PreconditionError(
            "zero constant term violated (sequence of a class with an empty object)");
    const int n = a.order();
    UnivariateSeries s(n);
    s.set_coeff(0, Rational(1));
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) {
            const Rational& ai = a.coeff(i);
            if (sgn(ai) != 0)
                acc += ai * s.coeff(k - i);
        }
        s.set_coeff(k, acc);
    }
    return s;
}

UnivariateSeries derivative(const UnivariateSeries& a) {
    const int n = std::max(a.order() - 1, 0);
    UnivariateSeries d(n);
    for (int k = 1; k <= a.order(); ++k)
        d.set_coeff(k - 1, Rational(k) * a.coeff(k));
    return d;
}

UnivariateSeries solve_quadratic(const UnivariateSeries& A,
                                 const UnivariateSeries& B,
                                 const UnivariateSeries& C,
                                 const Rational& f0) {
    require_equal_orders(A, B);
    require_equal_orders(A, C);
    const int n = A.order();

    // f = f0 + g with g of valuation >= 1:
    //   (2 A f0 + B) g = -(A f0^2 + B f0 + C) - A g^2
    UnivariateSeries e = B + (Rational(2) * f0) * A;
    if (sgn(e.coeff(0)) == 0)
        throw PreconditionError(
            "degenerate extraction: B(0) + 2 A(0) f0 != 0 violated");
    UnivariateSeries r0 = (f0 * f0) * A + f0 * B + C;
    if (sgn(r0.coeff(0)) != 0)
        throw PreconditionError(
            "f0 is not a root of the constant-term quadratic (root selection)");

    const UnivariateSeries e_inv = inverse(e);
    UnivariateSeries g(n);
    // each pass fixes at least one more coefficient
    for (int pass = 0; pass <= n + 1; ++pass) {
        UnivariateSeries next = -(r0 + A * (g * g)) * e_inv;
        if (next == g)
            break;
        g = std::move(next);
    }
    g.set_coeff(0, g.coeff(0) + f0);
    return g;
}

} // namespace jointgf
