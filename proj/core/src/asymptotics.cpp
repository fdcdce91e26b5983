#include "jointgf/asymptotics.hpp"

#include "jointgf/errors.hpp"
#include "jointgf/joint.hpp"
#include "jointgf/shapes.hpp"

namespace jointgf {

namespace {

void require_cell(int sigma, int lambda) {
    if (sigma < 1 || sigma > 9)
        throw PreconditionError("1 <= sigma <= 9 violated (sigma=" +
                                std::to_string(sigma) + ")");
    if (lambda < 1)
        throw PreconditionError("lambda >= 1 violated (lambda=" +
                                std::to_string(lambda) + ")");
    if (lambda > sigma + 1)
        throw PreconditionError("lambda <= sigma + 1 violated (lambda=" +
                                std::to_string(lambda) + ", sigma=" +
                                std::to_string(sigma) + ")");
}

} // namespace

Real inner_function_value(int sigma, int lambda, const Real& x) {
    const Real t = secondary_value(sigma, lambda, x);
    const Real denom = 1 - x * x - pow(x, 2 * sigma) * (t * t - 1);
    if (denom <= 0)
        throw EvaluationDomainError(
            "1 - x^2 - x^(2 sigma) (T^2 - 1) > 0 violated at x=" + x.str());
    return pow(x, 2 * sigma) * t * t / denom;
}

Real dominant_singularity(int sigma, int lambda) {
    require_cell(sigma, lambda);
    const Real rho = shape_singularity();
    const Real radius = secondary_radius(sigma, lambda);

    // coarse scan for the first crossing of rho, strictly inside the disc of
    // the secondary-structure series
    const Real step = Real(1) / 1000;
    Real lo(0), hi(0);
    bool bracketed = false;
    for (Real x = step; x < radius; x += step) {
        const Real value = inner_function_value(sigma, lambda, x);
        if (value >= rho) {
            hi = x;
            bracketed = true;
            break;
        }
        lo = x;
    }
    if (!bracketed)
        throw EvaluationDomainError(
            "no solution of zeta(z) = rho strictly inside the analyticity disc "
            "(sigma=" + std::to_string(sigma) + ", lambda=" + std::to_string(lambda) +
            ", disc radius ~ " + radius.str(8, std::ios_base::fixed) + ")");

    const Real width = Real(1) / pow(Real(10), 25);
    while (hi - lo > width) {
        const Real mid = (lo + hi) / 2;
        if (mid == lo || mid == hi)
            break;
        if (inner_function_value(sigma, lambda, mid) < rho)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

std::pair<Real, Real> shape_singular_expansion() {
    const Real rho = shape_singularity();
    const Real scale = 2 * rho * (rho + 2);
    const Real u0 = (1 + 3 * rho + rho * rho) / scale;
    const Real u1 = -sqrt(-shape_singularity_polynomial_derivative(rho)) / scale;
    return {u0, u1};
}

Real inner_function_derivative(int sigma, int lambda, const Real& x) {
    // central differences at h, h/2, h/4 with two Richardson stages
    const Real h = Real(1) / pow(Real(10), 12);
    auto central = [&](const Real& step) -> Real {
        return (inner_function_value(sigma, lambda, x + step) -
                inner_function_value(sigma, lambda, x - step)) /
               (2 * step);
    };
    const Real d1 = central(h);
    const Real d2 = central(h / 2);
    const Real d3 = central(h / 4);
    const Real r1 = (4 * d2 - d1) / 3;
    const Real r2 = (4 * d3 - d2) / 3;
    return (16 * r2 - r1) / 15;
}

Real asymptotic_constant(int sigma, int lambda) {
    const Real gamma = dominant_singularity(sigma, lambda);
    const Real t = secondary_value(sigma, lambda, gamma);
    const Real g1 = inner_function_derivative(sigma, lambda, gamma);
    const Real u1 = shape_singular_expansion().second;
    const Real gamma_minus_half = -2 * sqrt(pi_value());
    return t * t * u1 * sqrt(g1 * gamma) / gamma_minus_half;
}

Real asymptotic_estimate(int sigma, int lambda, int s) {
    if (s < 1)
        throw PreconditionError("s >= 1 violated");
    const Real gamma = dominant_singularity(sigma, lambda);
    const Real c = asymptotic_constant(sigma, lambda);
    const Real ss(s);
    return c / (ss * sqrt(ss)) * pow(1 / gamma, s);
}

SingularityReport singularity_report(int sigma, int lambda) {
    SingularityReport report;
    report.sigma = sigma;
    report.lambda = lambda;
    report.rho = shape_singularity();
    if (lambda > sigma + 1) {
        // the inflation composition is not defined here; never report a value
        report.applicable = false;
        report.reason = "lambda <= sigma + 1 violated";
        return report;
    }
    report.applicable = true;
    report.gamma = dominant_singularity(sigma, lambda);
    report.growth_rate = 1 / report.gamma;
    report.zeta_at_gamma = inner_function_value(sigma, lambda, report.gamma);
    report.zeta_prime_at_gamma = inner_function_derivative(sigma, lambda, report.gamma);
    const Real t = secondary_value(sigma, lambda, report.gamma);
    report.t_squared_at_gamma = t * t;
    report.u1 = shape_singular_expansion().second;
    report.constant = report.t_squared_at_gamma * report.u1 *
                      sqrt(report.zeta_prime_at_gamma * report.gamma) /
                      (-2 * sqrt(pi_value()));
    return report;
}

std::vector<ComparisonRow> compare_exact_vs_asymptotic(int sigma, int lambda, int s_max) {
    require_cell(sigma, lambda);
    if (s_max < 1)
        throw PreconditionError("s_max >= 1 violated");
    if (s_max > 2000)
        throw PreconditionError("s_max <= 2000 violated (s_max=" +
                                std::to_string(s_max) + ")");
    const std::vector<Integer> exact = joint_counts_by_recurrence(sigma, s_max, lambda);
    const Real gamma = dominant_singularity(sigma, lambda);
    const Real c = asymptotic_constant(sigma, lambda);
    const Real inv_gamma = 1 / gamma;

    std::vector<ComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(s_max));
    Real growth = 1;
    for (int s = 1; s <= s_max; ++s) {
        growth *= inv_gamma;
        const Real ss(s);
        ComparisonRow row;
        row.s = s;
        row.exact = exact[static_cast<std::size_t>(s)];
        row.estimate = c / (ss * sqrt(ss)) * growth;
        row.ratio = to_real(row.exact) / row.estimate;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace jointgf
