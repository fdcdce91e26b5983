#include "jointgf/secondary.hpp"

#include <string>

#include "jointgf/errors.hpp"
#include "jointgf/recurrences.hpp"

namespace jointgf {

namespace {

void require_sigma(int sigma) {
    if (sigma < 1)
        throw PreconditionError("sigma >= 1 violated (sigma=" + std::to_string(sigma) + ")");
}

void require_lambda(int lambda) {
    if (lambda < 1)
        throw PreconditionError("lambda >= 1 violated (lambda=" + std::to_string(lambda) + ")");
}

// q(z) = z^(2 sigma) - z^2 + 1, the denominator cleared from the stack kernel
UnivariateSeries kernel_denominator(int sigma, int order) {
    UnivariateSeries q = UnivariateSeries::one(order);
    if (2 <= order)
        q.set_coeff(2, q.coeff(2) - 1);
    if (2 * sigma <= order)
        q.set_coeff(2 * sigma, q.coeff(2 * sigma) + 1);
    return q;
}

} // namespace

void validate(const StructureParams& params) {
    require_sigma(params.sigma);
    if (params.tau < 1)
        throw PreconditionError("tau >= 1 violated (tau=" + std::to_string(params.tau) + ")");
    require_lambda(params.lambda);
}

UnivariateSeries noncrossing_matching_gf(int order) {
    if (order < 0)
        throw PreconditionError("order >= 0 violated");
    // work one order higher so the z-cancellation keeps the requested order
    const int n = order + 1;
    UnivariateSeries radicand = UnivariateSeries::one(n);
    radicand.set_coeff(1, Rational(-4));
    UnivariateSeries numerator = UnivariateSeries::one(n) - sqrt(radicand);
    UnivariateSeries denominator = UnivariateSeries::monomial(Rational(2), 1, n);
    return div(numerator, denominator);
}

UnivariateSeries stack_kernel(int sigma, int order) {
    require_sigma(sigma);
    const UnivariateSeries numerator =
        UnivariateSeries::monomial(Rational(1), 2 * sigma - 2, order);
    return div(numerator, kernel_denominator(sigma, order));
}

UnivariateSeries arc_length_kernel(int sigma, int lambda, int order) {
    require_sigma(sigma);
    require_lambda(lambda);
    UnivariateSeries v = UnivariateSeries::one(order);
    if (1 <= order)
        v.set_coeff(1, Rational(-1));
    if (lambda >= 2) {
        UnivariateSeries powers(order);
        for (int h = 2; h <= lambda && h <= order; ++h)
            powers.set_coeff(h, Rational(1));
        v = v + stack_kernel(sigma, order) * powers;
    }
    return v;
}

UnivariateSeries secondary_gf(int sigma, int lambda, int order) {
    require_sigma(sigma);
    require_lambda(lambda);
    if (order < 0)
        throw PreconditionError("order >= 0 violated");
    const UnivariateSeries u = stack_kernel(sigma, order);
    const UnivariateSeries v = arc_length_kernel(sigma, lambda, order);
    // w = u z^2 / v^2 has valuation 2 sigma >= 2
    const UnivariateSeries w =
        div(u * UnivariateSeries::monomial(Rational(1), 2, order), v * v);
    return div(compose(noncrossing_matching_gf(order), w), v);
}

std::vector<Integer> secondary_counts(int sigma, int lambda, int n_max) {
    require_sigma(sigma);
    require_lambda(lambda);
    if (n_max < 0)
        throw PreconditionError("n_max >= 0 violated");
    const std::size_t len = static_cast<std::size_t>(n_max) + 1;
    auto at = [&](std::vector<Integer>& v, int k, long delta) {
        if (k <= n_max)
            v[static_cast<std::size_t>(k)] += delta;
    };
    // z^(2 sigma) T^2 - (q (1-z) + sum_{h=2}^lambda z^(2 sigma - 2 + h)) T + q = 0
    std::vector<Integer> a(len), b(len), c(len);
    at(a, 2 * sigma, 1);
    at(c, 0, 1);
    at(c, 2, -1);
    at(c, 2 * sigma, 1);
    // b = -(q - q z + the arc-length sum)
    at(b, 0, -1);
    at(b, 1, 1);
    at(b, 2, 1);
    at(b, 3, -1);
    at(b, 2 * sigma, -1);
    at(b, 2 * sigma + 1, 1);
    for (int h = 2; h <= lambda; ++h)
        at(b, 2 * sigma - 2 + h, -1);
    return quadratic_recurrence_counts(a, b, c, n_max);
}

Real secondary_value(int sigma, int lambda, const Real& x) {
    require_sigma(sigma);
    require_lambda(lambda);
    if (x < 0)
        throw EvaluationDomainError("0 <= x violated");
    const Real q = pow(x, 2 * sigma) - x * x + 1;
    if (q <= 0)
        throw EvaluationDomainError("z^(2 sigma) - z^2 + 1 > 0 violated at x=" + x.str());
    const Real u = pow(x, 2 * sigma - 2) / q;
    Real v = 1 - x;
    for (int h = 2; h <= lambda; ++h)
        v += u * pow(x, h);
    if (v == 0)
        throw EvaluationDomainError("v(x) != 0 violated at x=" + x.str());
    const Real w = u * x * x / (v * v);
    const Real disc = 1 - 4 * w;
    if (disc < 0)
        throw EvaluationDomainError("1 - 4 u(x) x^2 / v(x)^2 >= 0 violated at x=" + x.str());
    const Real f = (w == 0) ? Real(1) : (1 - sqrt(disc)) / (2 * w);
    return f / v;
}

Real secondary_radius(int sigma, int lambda) {
    require_sigma(sigma);
    require_lambda(lambda);
    // sign of q v^2 - 4 x^(2 sigma): positive at 0, negative past the branch
    // point of the matching generating function
    auto sign_fn = [&](const Real& x) -> Real {
        const Real q = pow(x, 2 * sigma) - x * x + 1;
        const Real u = pow(x, 2 * sigma - 2) / q;
        Real v = 1 - x;
        for (int h = 2; h <= lambda; ++h)
            v += u * pow(x, h);
        return q * v * v - 4 * pow(x, 2 * sigma);
    };
    const Real step = Real(1) / 1000;
    Real lo(0), hi;
    bool bracketed = false;
    for (Real x = step; x <= Real(3) / 2; x += step) {
        if (sign_fn(x) <= 0) {
            hi = x;
            bracketed = true;
            break;
        }
        lo = x;
    }
    if (!bracketed)
        throw EvaluationDomainError(
            "no dominant singularity found below 3/2 (sigma=" + std::to_string(sigma) +
            ", lambda=" + std::to_string(lambda) + ")");
    const Real width = Real(1) / pow(Real(10), 30);
    while (hi - lo > width) {
        const Real mid = (lo + hi) / 2;
        if (mid == lo || mid == hi)
            break;
        if (sign_fn(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

} // namespace jointgf
