#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jointgf/rational.hpp"
#include "jointgf/real.hpp"
#include "jointgf/secondary.hpp"

namespace jointgf {

// High-precision location of the dominant singularity of the joint-structure
// counting series and the constants of the asymptotic law
//   J(s) ~ c * s^(-3/2) * growth_rate^s.
// sigma == tau throughout this layer.

// zeta(x) = x^(2 sigma) T(x)^2 / (1 - x^2 - x^(2 sigma) (T(x)^2 - 1)), the
// inner function of the supercritical composition, at a real point.
Real inner_function_value(int sigma, int lambda, const Real& x);

// The minimal positive solution of zeta(x) = rho, located by a coarse scan
// (step 1e-3) for a sign change of zeta - rho followed by bisection to
// absolute width 1e-25. Verifies along the way that the crossing lies
// strictly inside the analyticity disc of the secondary-structure series;
// throws EvaluationDomainError with a diagnostic otherwise. Preconditions:
// 1 <= sigma <= 9, 1 <= lambda <= sigma + 1.
Real dominant_singularity(int sigma, int lambda);

// Coefficients (u0, u1) of the singular expansion
//   U(z) = u0 + u1 (rho - z)^(1/2) + O(rho - z),
// with u0 = (1 + 3 rho + rho^2) / (2 rho (rho + 2)) and
// u1 = -sqrt(-P'(rho)) / (2 rho (rho + 2)); u1 < 0.
std::pair<Real, Real> shape_singular_expansion();

// Derivative of the inner function at a real point, by Richardson-
// extrapolated central differences over three step sizes.
Real inner_function_derivative(int sigma, int lambda, const Real& x);

// c = t0 * u1 * sqrt(g1 * gamma) / Gamma(-1/2), with t0 = T(gamma)^2,
// g1 = zeta'(gamma), Gamma(-1/2) = -2 sqrt(pi). Positive: u1 and
// Gamma(-1/2) are both negative.
Real asymptotic_constant(int sigma, int lambda);

// c * s^(-3/2) * (1/gamma)^s
Real asymptotic_estimate(int sigma, int lambda, int s);

struct SingularityReport {
    int sigma = 0;
    int lambda = 0;
    bool applicable = false;
    std::string reason;  // set when not applicable
    Real rho{0};
    Real gamma{0};
    Real growth_rate{0};
    Real constant{0};
    // diagnostics
    Real zeta_at_gamma{0};
    Real zeta_prime_at_gamma{0};
    Real t_squared_at_gamma{0};
    Real u1{0};
};

// Everything above bundled for one (sigma, lambda) cell; lambda > sigma + 1
// yields applicable = false (never a computed zero).
SingularityReport singularity_report(int sigma, int lambda);

struct ComparisonRow {
    int s = 0;
    Integer exact;
    Real estimate{0};
    Real ratio{0};  // exact / estimate
};

// Exact counts from the recurrence against the asymptotic estimate, for
// s = 1..s_max (s_max <= 2000).
std::vector<ComparisonRow> compare_exact_vs_asymptotic(int sigma, int lambda, int s_max);

} // namespace jointgf
