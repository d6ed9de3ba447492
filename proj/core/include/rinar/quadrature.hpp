#pragma once

#include <functional>

#include "rinar/complex_utils.hpp"

namespace rinar {

enum class QuadMethod {
    DoubleExponential,         // tanh-sinh on (0,1); robust for (1-a)^beta endpoints
    AdaptiveWithSubstitution,  // split at 1-eps, substitute u = (1-a)^(1+beta) on the tail
};

struct QuadratureSpec {
    QuadMethod method = QuadMethod::DoubleExponential;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_refinements = 12;

    /// Exponent needed by the tail substitution; ignored by the DE method.
    double beta = 0.0;
    /// Split point for AdaptiveWithSubstitution.
    double split = 0.9;
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double error = 0.0;  // estimated absolute error
    bool converged = false;
    long evaluations = 0;
};

/// Integrand over (0,1); receives both the abscissa and its distance to 1 so
/// endpoint factors like (1-a)^beta can be formed without cancellation.
using Integrand01 = std::function<Complex(double a, double one_minus_a)>;

/// Integrates f over (0,1) with the tanh-sinh (double exponential) rule.
/// Endpoint algebraic singularities integrable on (0,1) are handled as long
/// as f stays o((min(a,1-a))^-1).
QuadResult tanh_sinh_01(const Integrand01& f, const QuadratureSpec& spec);

/// Integrates f over (0,1) by splitting at `spec.split` and substituting
/// u = (1-a)^(1+beta) on (split, 1); f must then absorb no (1-a)^beta factor,
/// so the caller passes the *smooth part* g with f = g(a)(1-a)^beta.
/// Both pieces use adaptive Simpson refinement.
QuadResult adaptive_substitution_01(const Integrand01& smooth_part, const QuadratureSpec& spec);

/// Dispatches on spec.method. For AdaptiveWithSubstitution the integrand must
/// be the smooth part (without the (1-a)^beta weight); for DoubleExponential
/// the weight is applied internally using spec.beta.
QuadResult integrate_mixture(const Integrand01& smooth_part, const QuadratureSpec& spec);

}  // namespace rinar
