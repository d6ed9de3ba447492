#pragma once

#include "rinar/complex_utils.hpp"

namespace rinar::cf {

/// Scale constant of the symmetric 2(1+beta)-stable limit:
/// psi1 (lambda/2)^(1+beta) Gamma(-beta) / (1+beta), for beta in (-1, 0).
/// Throws BetaNotInStableRange outside the open interval.
double k_beta(double beta, double lambda, double psi1);

/// CF of the stable limit: exp(-K_beta |theta|^{2(1+beta)}).
Complex stable_limit_cf(double theta, double beta, double lambda, double psi1);

/// CF of the Gaussian limit (beta = 0): exp(-lambda psi1 theta^2 / 2).
Complex normal_limit_cf(double theta, double lambda, double psi1);

}  // namespace rinar::cf
