#include "rinar/mixture_cf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rinar::cf {

namespace {

// The conditional CF has modulus <= 1, so the exponent's real part is <= 0 up
// to roundoff. Anything clearly positive means a broken formula, not noise.
double checked_nonpositive_real(const Complex& z) {
    double re = z.real();
    if (re > std::max(1e-10, 1e-13 * std::abs(z))) {
        throw std::logic_error("CF exponent real part " + std::to_string(re) +
                               " is positive beyond roundoff");
    }
    return re > 0.0 ? 0.0 : re;
}

Complex clamped(const Complex& z) { return {checked_nonpositive_real(z), z.imag()}; }

// integral of psi(a)(1-a)^beta (1 - e^{exponent(a)}) da over (0,1).
QuadResult deficit_integral(const MixingLaw& mixing,
                            const std::function<Complex(const AlphaPoint&)>& exponent,
                            const QuadratureSpec& quad) {
    QuadratureSpec spec = quad;
    spec.beta = mixing.beta;
    auto smooth = [&](double a, double oma) -> Complex {
        AlphaPoint alpha{a, oma};
        Complex z = clamped(exponent(alpha));
        return -mixing.psi(a) * expm1c(z);
    };
    return integrate_mixture(smooth, spec);
}

QuadResult deficit_for_blocks(const BlockCoeffs& blocks, const MixingLaw& mixing,
                              const ModelParams& params, const QuadratureSpec& quad) {
    return deficit_integral(
        mixing,
        [&](const AlphaPoint& alpha) {
            return params.lambda / alpha.one_minus_a * kn_exponent(alpha, blocks);
        },
        quad);
}

void require_converged(const QuadResult& res, const char* what) {
    if (!res.converged) {
        throw QuadratureNotConverged(std::string(what) +
                                         ": quadrature tolerance unreachable, achieved " +
                                         std::to_string(res.error),
                                     res.error);
    }
}

}  // namespace

Complex conditional_cf(const AlphaPoint& alpha, double lambda, const BlockCoeffs& blocks) {
    Complex z = lambda / alpha.one_minus_a * kn_exponent(alpha, blocks);
    return exp_nonexpanding(clamped(z));
}

CfValue mixture_cf_blocks(const BlockCoeffs& blocks, const MixingLaw& mixing,
                          const ModelParams& params, const QuadratureSpec& quad) {
    QuadResult res = deficit_for_blocks(blocks, mixing, params, quad);
    require_converged(res, "mixture_cf_blocks");
    return {Complex(1.0, 0.0) - res.value, res.error};
}

CfValue single_copy_cf(std::int64_t n, const TimeGrid& grid, const ThetaVec& thetas,
                       const MixingLaw& mixing, const ModelParams& params,
                       ExponentFormula formula, const QuadratureSpec& quad) {
    if (formula == ExponentFormula::K) {
        return mixture_cf_blocks(BlockCoeffs::tails(n, grid, thetas), mixing, params, quad);
    }
    QuadResult res = deficit_integral(
        mixing,
        [&](const AlphaPoint& alpha) {
            return params.lambda * kn_tilde_exponent(alpha, n, grid, thetas);
        },
        quad);
    require_converged(res, "single_copy_cf[ktilde]");
    return {Complex(1.0, 0.0) - res.value, res.error};
}

CfValue panel_cf(std::int64_t N, double scaling, std::int64_t n, const TimeGrid& grid,
                 const ThetaVec& thetas, const MixingLaw& mixing, const ModelParams& params,
                 ExponentFormula formula, const QuadratureSpec& quad) {
    ThetaVec scaled;
    scaled.thetas.reserve(thetas.size());
    for (double th : thetas.thetas) scaled.thetas.push_back(scaling * th);
    CfValue one = single_copy_cf(n, grid, scaled, mixing, params, formula, quad);
    double nd = static_cast<double>(N);
    CfValue out;
    out.value = std::pow(one.value, nd);
    out.quad_err = std::min(2.0, nd * std::pow(std::abs(one.value), nd - 1.0)) * one.quad_err;
    return out;
}

CfValue scaled_cf_deficit(double N, const BlockCoeffs& blocks, const MixingLaw& mixing,
                          const ModelParams& params, const QuadratureSpec& quad) {
    QuadResult res = deficit_for_blocks(blocks, mixing, params, quad);
    require_converged(res, "scaled_cf_deficit");
    return {N * res.value, N * res.error};
}

}  // namespace rinar::cf
