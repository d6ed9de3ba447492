#pragma once

#include <cstdint>

#include "rinar/rng.hpp"
#include "rinar/types.hpp"

namespace rinar::sim {

/// Draw from the mixing density psi(x)(1-x)^beta.
///
/// BetaForm samples Beta(a+1, beta+1) exactly (gamma ratio); ConstantPsi and
/// Custom use rejection against a Beta(1, beta+1) envelope with bound
/// 1.05 * sup psi. Throws RejectionBudgetExceeded after `max_attempts`
/// rejected proposals.
double sample_alpha(const MixingLaw& mixing, PhiloxStream& rng, int max_attempts = 100000);

/// Poisson draw supporting large means (returned as int64).
std::int64_t poisson_draw(double mean, PhiloxStream& rng);

/// Binomial thinning: one Binomial(count, p) draw rather than `count`
/// Bernoulli draws; distributionally identical and fast for large states.
std::int64_t binomial_thin(std::int64_t count, double p, PhiloxStream& rng);

}  // namespace rinar::sim
