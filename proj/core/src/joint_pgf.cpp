#include "rinar/joint_pgf.hpp"

#include <cmath>
#include <string>

#include "rinar/errors.hpp"

namespace rinar::cf {

Complex joint_pgf(double a, double lambda, std::span<const Complex> z) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (std::abs(z[i]) > 1.0 + 1e-12) {
            throw ModulusViolation("joint_pgf requires |z_i| <= 1, got |z_" + std::to_string(i) +
                                   "| = " + std::to_string(std::abs(z[i])));
        }
    }
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        Complex zi_m1 = z[i] - 1.0;
        sum += zi_m1;  // i == j term
        double apow = 1.0;
        Complex interior(1.0, 0.0);  // z_{i+1} ... z_{j-1}
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            apow *= a;
            if (j > i + 1) interior *= z[j - 1];
            sum += apow * zi_m1 * interior * (z[j] - 1.0);
        }
    }
    return std::exp(lambda / (1.0 - a) * sum);
}

}  // namespace rinar::cf
