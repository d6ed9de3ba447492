#include "rinar/limit_cf.hpp"

#include <cmath>
#include <string>

#include "rinar/errors.hpp"

namespace rinar::cf {

double k_beta(double beta, double lambda, double psi1) {
    if (!(beta > -1.0) || !(beta < 0.0)) {
        throw BetaNotInStableRange("k_beta requires beta in (-1, 0), got " +
                                   std::to_string(beta));
    }
    return psi1 * std::pow(0.5 * lambda, 1.0 + beta) * std::tgamma(-beta) / (1.0 + beta);
}

Complex stable_limit_cf(double theta, double beta, double lambda, double psi1) {
    double kb = k_beta(beta, lambda, psi1);
    return {std::exp(-kb * std::pow(std::fabs(theta), 2.0 * (1.0 + beta))), 0.0};
}

Complex normal_limit_cf(double theta, double lambda, double psi1) {
    return {std::exp(-0.5 * lambda * psi1 * theta * theta), 0.0};
}

}  // namespace rinar::cf
