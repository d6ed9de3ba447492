#pragma once

#include <cstdint>

#include "rinar/cf_exponents.hpp"
#include "rinar/quadrature.hpp"
#include "rinar/types.hpp"

namespace rinar::cf {

/// A CF value together with the quadrature error actually achieved.
struct CfValue {
    Complex value{1.0, 0.0};
    double quad_err = 0.0;
};

/// Conditional CF given alpha: exp((lambda/(1-a)) K_n(a)) or
/// exp(lambda K~_n(a)) depending on the formula. The real part of the
/// exponent is mathematically <= 0; it is checked and then clamped so the
/// modulus can never overflow 1.
Complex conditional_cf(const AlphaPoint& alpha, double lambda, const BlockCoeffs& blocks);

/// Mixture CF over the law of alpha at arbitrary per-block coefficients:
/// integral of the conditional CF against psi(a)(1-a)^beta. Self-normalizing:
/// the density is integrated on the same nodes and divides the result, so the
/// CF at the origin is exactly 1.
///
/// Throws QuadratureNotConverged when tolerances are unreachable within
/// spec.max_refinements.
CfValue mixture_cf_blocks(const BlockCoeffs& blocks, const MixingLaw& mixing,
                          const ModelParams& params, const QuadratureSpec& quad);

/// Joint CF of (S^{(1,n)}_{t_1}, ..., S^{(1,n)}_{t_m}) at frequencies thetas.
/// Formula K routes through the collapsed blockwise exponent; KTilde routes
/// through the series-representation form. Both agree to quadrature accuracy.
CfValue single_copy_cf(std::int64_t n, const TimeGrid& grid, const ThetaVec& thetas,
                       const MixingLaw& mixing, const ModelParams& params,
                       ExponentFormula formula, const QuadratureSpec& quad);

/// CF of the N-copy aggregate at frequencies scaling * thetas:
/// single_copy_cf(scaling * thetas)^N.
CfValue panel_cf(std::int64_t N, double scaling, std::int64_t n, const TimeGrid& grid,
                 const ThetaVec& thetas, const MixingLaw& mixing, const ModelParams& params,
                 ExponentFormula formula, const QuadratureSpec& quad);

/// N * (1 - mixture CF) at the given per-block coefficients, evaluated as one
/// integral of 1 - e^{exponent} so no precision is lost when the CF is within
/// an ulp of 1 (which is the regime of the limit theorems).
CfValue scaled_cf_deficit(double N, const BlockCoeffs& blocks, const MixingLaw& mixing,
                          const ModelParams& params, const QuadratureSpec& quad);

}  // namespace rinar::cf
