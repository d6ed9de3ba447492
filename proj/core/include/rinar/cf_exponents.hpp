#pragma once

#include <cstdint>

#include "rinar/complex_utils.hpp"
#include "rinar/types.hpp"

namespace rinar::cf {

/// Thinning coefficient with its complement carried separately, so formulas
/// keep full precision when a is within a few ulps of 1 (where the mixture
/// integrals concentrate).
struct AlphaPoint {
    double a;
    double one_minus_a;

    static AlphaPoint of(double a) { return {a, 1.0 - a}; }
};

enum class ExponentFormula { K, KTilde };

/// K_n(a): the blockwise closed-form exponent of the joint CF. The conditional
/// CF given alpha = a is exp((lambda/(1-a)) K_n(a)).
///
/// blocks.coeffs[l] plays the role of the coefficient multiplying increment
/// block l: the cumulative tails theta_l+...+theta_m for the joint CF of
/// (S_{t_1},...,S_{t_m}), or scaled per-block frequencies for the limit
/// functionals. Geometric sums are collapsed, so the cost is O(m^2), not
/// O((n t_m)^2).
Complex kn_exponent(const AlphaPoint& alpha, const BlockCoeffs& blocks);

/// K~_n(a): the alternative exponent built from the stationary series
/// representation; the conditional CF is exp(lambda * K~_n(a)). Evaluated in
/// its finite double-sum form, cost O((n t_m)^2). For all inputs
/// K~_n(a) = K_n(a)/(1-a).
Complex kn_tilde_exponent(const AlphaPoint& alpha, std::int64_t n, const TimeGrid& grid,
                          const ThetaVec& thetas);

/// Geometric helpers shared with the tests: sum_{u=0}^{count-1} r^u and
/// sum_{g=1}^{count-1} (count-g) r^g with r = a e^{ic}, switched to direct
/// summation near the removable singularity r -> 1.
Complex geometric_sum(const AlphaPoint& alpha, double c, std::int64_t count);
Complex weighted_geometric_sum(const AlphaPoint& alpha, double c, std::int64_t count);

}  // namespace rinar::cf
