#include "rinar/cf_exponents.hpp"

#include <cmath>
#include <vector>

namespace rinar::cf {

namespace {

// 1 - r for r = a e^{ic}, assembled from the complements so it stays accurate
// when both 1-a and c are tiny.
Complex one_minus_r(const AlphaPoint& alpha, double c) {
    return Complex(alpha.one_minus_a, 0.0) - alpha.a * cis_m1(c);
}

double pow_a(const AlphaPoint& alpha, std::int64_t k) {
    if (k == 0) return 1.0;
    if (alpha.a <= 0.0) return 0.0;
    return std::exp(static_cast<double>(k) * std::log1p(-alpha.one_minus_a));
}

Complex pow_r(const AlphaPoint& alpha, double c, std::int64_t k) {
    return pow_a(alpha, k) * cis(static_cast<double>(k) * c);
}

}  // namespace

Complex geometric_sum(const AlphaPoint& alpha, double c, std::int64_t count) {
    if (count <= 0) return {0.0, 0.0};
    Complex omr = one_minus_r(alpha, c);
    Complex r = alpha.a * cis(c);
    double m = static_cast<double>(count);

    if (count <= 64) {
        Complex acc(0.0, 0.0);
        Complex p(1.0, 0.0);
        for (std::int64_t u = 0; u < count; ++u) {
            acc += p;
            p *= r;
        }
        return acc;
    }
    if (std::abs(omr) * m <= 0.05) {
        // Binomial series around the confluent point r = 1:
        // sum_{u<M} r^u = sum_{k>=0} C(M, k+1) (r-1)^k.
        Complex delta = -omr;
        Complex acc(0.0, 0.0);
        double binom = m;  // C(M, 1)
        Complex dpow(1.0, 0.0);
        for (int k = 0; k <= 20; ++k) {
            acc += binom * dpow;
            binom *= (m - (k + 1)) / (k + 2.0);
            dpow *= delta;
        }
        return acc;
    }
    return (Complex(1.0, 0.0) - pow_r(alpha, c, count)) / omr;
}

Complex weighted_geometric_sum(const AlphaPoint& alpha, double c, std::int64_t count) {
    if (count <= 1) return {0.0, 0.0};
    Complex omr = one_minus_r(alpha, c);
    Complex r = alpha.a * cis(c);
    double m = static_cast<double>(count);

    if (count <= 64) {
        Complex acc(0.0, 0.0);
        Complex p(1.0, 0.0);
        for (std::int64_t g = 1; g < count; ++g) {
            p *= r;
            acc += static_cast<double>(count - g) * p;
        }
        return acc;
    }
    if (std::abs(omr) * m <= 0.05) {
        // sum_{g=1}^{M-1} (M-g) r^g = r sum_{j>=0} C(M, j+2) (r-1)^j.
        Complex delta = -omr;
        Complex acc(0.0, 0.0);
        double binom = m * (m - 1.0) / 2.0;  // C(M, 2)
        Complex dpow(1.0, 0.0);
        for (int j = 0; j <= 20; ++j) {
            acc += binom * dpow;
            binom *= (m - (j + 2)) / (j + 3.0);
            dpow *= delta;
        }
        return r * acc;
    }
    Complex geo = (Complex(1.0, 0.0) - pow_r(alpha, c, count)) / omr;
    return r * (m - geo) / omr;
}

Complex kn_exponent(const AlphaPoint& alpha, const BlockCoeffs& blocks) {
    const std::size_t m = blocks.blocks();
    Complex total(0.0, 0.0);

    std::vector<std::int64_t> d(m);
    for (std::size_t l = 0; l < m; ++l) d[l] = blocks.bounds[l + 1] - blocks.bounds[l];

    // Diagonal term and within-block pairs.
    for (std::size_t l = 0; l < m; ++l) {
        if (d[l] == 0) continue;
        double c = blocks.coeffs[l];
        total += static_cast<double>(d[l]) * cis_m1_mix(c);
        Complex e = cis_m1(c);
        total += e * e * cis(-c) * weighted_geometric_sum(alpha, c, d[l]);
    }

    // Cross-block pairs: both geometric factors collapse, the in-between
    // blocks only contribute a fixed phase.
    for (std::size_t l1 = 0; l1 < m; ++l1) {
        if (d[l1] == 0) continue;
        Complex e1 = cis_m1(blocks.coeffs[l1]);
        Complex g1 = geometric_sum(alpha, blocks.coeffs[l1], d[l1]);
        double phase_between = 0.0;
        for (std::size_t l2 = l1 + 1; l2 < m; ++l2) {
            if (d[l2] != 0) {
                Complex e2 = cis_m1(blocks.coeffs[l2]);
                Complex g2 = geometric_sum(alpha, blocks.coeffs[l2], d[l2]);
                std::int64_t gap = blocks.bounds[l2] + 1 - blocks.bounds[l1 + 1];
                total += e1 * e2 * pow_a(alpha, gap) * cis(phase_between) * g1 * g2;
            }
            phase_between += blocks.coeffs[l2] * static_cast<double>(d[l2]);
        }
    }
    return total;
}

Complex kn_tilde_exponent(const AlphaPoint& alpha, std::int64_t n, const TimeGrid& grid,
                          const ThetaVec& thetas) {
    auto bounds = BlockCoeffs::bounds_for(n, grid);
    const std::int64_t B = bounds.back();
    if (B == 0) return {0.0, 0.0};

    // Prefix sums T[j] of theta~_j; theta~ is constant on each block and
    // equals the tail sum theta_l + ... + theta_m there.
    std::vector<double> prefix(static_cast<std::size_t>(B) + 1, 0.0);
    {
        std::vector<double> tails(thetas.size() + 1, 0.0);
        for (std::size_t l = thetas.size(); l-- > 0;) tails[l] = tails[l + 1] + thetas.thetas[l];
        std::size_t block = 0;
        for (std::int64_t j = 1; j <= B; ++j) {
            while (j > bounds[block + 1]) ++block;
            prefix[j] = prefix[j - 1] + tails[block];
        }
    }

    const double a = alpha.a;
    const double oma = alpha.one_minus_a;
    std::vector<double> apow(static_cast<std::size_t>(B) + 1, 1.0);
    for (std::int64_t k = 1; k <= B; ++k) apow[k] = apow[k - 1] * a;

    Complex total(0.0, 0.0);
    // Collapsed l <= 0 part.
    for (std::int64_t k = 1; k <= B - 1; ++k) total += apow[k] * cis_m1_mix(prefix[k]);
    total += (apow[B] / oma) * cis_m1_mix(prefix[B]);
    // l = 1..B part, exactly as displayed (empty inner sum when l = B).
    for (std::int64_t l = 1; l <= B; ++l) {
        Complex inner(0.0, 0.0);
        for (std::int64_t k = l; k <= B - 1; ++k) {
            inner += apow[k - l] * cis_m1_mix(prefix[k] - prefix[l - 1]);
        }
        total += oma * inner + apow[B - l] * cis_m1_mix(prefix[B] - prefix[l - 1]);
    }
    return total;
}

}  // namespace rinar::cf
