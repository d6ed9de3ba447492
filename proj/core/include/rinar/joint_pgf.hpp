#pragma once

#include <span>

#include "rinar/complex_utils.hpp"

namespace rinar::cf {

/// Joint generator function E(z_0^{X_0} ... z_k^{X_k}) of a stationary INAR(1)
/// path with thinning parameter `a` and Poisson innovation rate `lambda`,
/// evaluated by the O(k^2) double sum. Deliberately direct: it is the
/// brute-force cross-check for the collapsed CF exponents.
///
/// Throws ModulusViolation if any |z_i| > 1 + 1e-12.
Complex joint_pgf(double a, double lambda, std::span<const Complex> z);

}  // namespace rinar::cf
