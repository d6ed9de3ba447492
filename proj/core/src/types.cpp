#include "rinar/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rinar/quadrature.hpp"

namespace rinar {

namespace {

// Normalization constant of the BetaForm density: the law is Beta(a+1, beta+1).
double beta_form_constant(double a_param, double beta) {
    return std::exp(std::lgamma(a_param + beta + 2.0) - std::lgamma(a_param + 1.0) -
                    std::lgamma(beta + 1.0));
}

double interp_table(const CustomPsi& tab, double x) {
    if (x <= tab.xs.front()) return tab.psis.front();
    if (x >= tab.xs.back()) {
        // Blend linearly toward the declared limit at 1.
        double span = 1.0 - tab.xs.back();
        if (span <= 0.0) return tab.psi1;
        double w = (x - tab.xs.back()) / span;
        return (1.0 - w) * tab.psis.back() + w * tab.psi1;
    }
    auto it = std::upper_bound(tab.xs.begin(), tab.xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - tab.xs.begin());
    std::size_t lo = hi - 1;
    double w = (x - tab.xs[lo]) / (tab.xs[hi] - tab.xs[lo]);
    return (1.0 - w) * tab.psis[lo] + w * tab.psis[hi];
}

}  // namespace

double MixingLaw::psi(double x) const {
    // Clamp away from 0 so BetaForm with a_param < 0 stays finite; the
    // density is integrable there and no quadrature node sits at 0 exactly.
    x = std::max(x, 1e-300);
    if (const auto* bf = std::get_if<BetaFormPsi>(&psi_kind)) {
        return beta_form_constant(bf->a_param, beta) * std::pow(x, bf->a_param);
    }
    if (const auto* cp = std::get_if<ConstantPsi>(&psi_kind)) {
        return cp->c;
    }
    return interp_table(std::get<CustomPsi>(psi_kind), x);
}

double MixingLaw::psi1() const {
    if (const auto* bf = std::get_if<BetaFormPsi>(&psi_kind)) {
        return beta_form_constant(bf->a_param, beta);
    }
    if (const auto* cp = std::get_if<ConstantPsi>(&psi_kind)) {
        return cp->c;
    }
    return std::get<CustomPsi>(psi_kind).psi1;
}

double MixingLaw::density(double x, double one_minus_x) const {
    return psi(x) * std::pow(one_minus_x, beta);
}

double MixingLaw::psi_sup() const {
    if (const auto* bf = std::get_if<BetaFormPsi>(&psi_kind)) {
        double c = beta_form_constant(bf->a_param, beta);
        if (bf->a_param < 0.0) return std::numeric_limits<double>::infinity();
        return c;
    }
    if (const auto* cp = std::get_if<ConstantPsi>(&psi_kind)) {
        return cp->c;
    }
    const auto& tab = std::get<CustomPsi>(psi_kind);
    double sup = tab.psi1;
    for (double v : tab.psis) sup = std::max(sup, v);
    return sup;
}

std::int64_t floor_scaled(std::int64_t n, double t) {
    double p = static_cast<double>(n) * t;
    double r = std::nearbyint(p);
    // Half-ulp guard: snap to the nearest integer when n*t sits within a few
    // ulps of it, so floor(2.9999999999999996) resolves to 3.
    double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(p));
    if (std::fabs(p - r) <= tol) return static_cast<std::int64_t>(r);
    return static_cast<std::int64_t>(std::floor(p));
}

std::vector<std::int64_t> BlockCoeffs::bounds_for(std::int64_t n, const TimeGrid& grid) {
    std::vector<std::int64_t> bounds;
    bounds.reserve(grid.size() + 1);
    bounds.push_back(0);
    for (double t : grid.times) bounds.push_back(floor_scaled(n, t));
    return bounds;
}

BlockCoeffs BlockCoeffs::tails(std::int64_t n, const TimeGrid& grid, const ThetaVec& thetas) {
    BlockCoeffs out;
    out.bounds = bounds_for(n, grid);
    out.coeffs.assign(thetas.size(), 0.0);
    double tail = 0.0;
    for (std::size_t l = thetas.size(); l-- > 0;) {
        tail += thetas.thetas[l];
        out.coeffs[l] = tail;
    }
    return out;
}

BlockCoeffs BlockCoeffs::scaled(std::int64_t n, const TimeGrid& grid, const ThetaVec& thetas,
                                double scaling) {
    BlockCoeffs out;
    out.bounds = bounds_for(n, grid);
    out.coeffs.reserve(thetas.size());
    for (double th : thetas.thetas) out.coeffs.push_back(scaling * th);
    return out;
}

std::vector<ValidationIssue> validate_mixing(const MixingLaw& mixing) {
    std::vector<ValidationIssue> issues;
    if (!(mixing.beta > -1.0) || !std::isfinite(mixing.beta)) {
        issues.push_back({"BetaOutOfRange",
                          "beta must satisfy beta > -1, got " + std::to_string(mixing.beta)});
        return issues;  // nothing below is meaningful without a valid beta
    }
    if (const auto* bf = std::get_if<BetaFormPsi>(&mixing.psi_kind)) {
        if (!(bf->a_param > -1.0) || !std::isfinite(bf->a_param)) {
            issues.push_back({"PsiParamOutOfRange", "BetaForm exponent must exceed -1, got " +
                                                        std::to_string(bf->a_param)});
        }
    } else if (const auto* cp = std::get_if<ConstantPsi>(&mixing.psi_kind)) {
        if (!(cp->c > 0.0) || !std::isfinite(cp->c)) {
            issues.push_back({"PsiParamOutOfRange", "constant psi must be positive"});
        } else if (std::fabs(cp->c / (1.0 + mixing.beta) - 1.0) > 1e-8) {
            issues.push_back({"MixingNotNormalized",
                              "constant psi integrates to c/(1+beta) = " +
                                  std::to_string(cp->c / (1.0 + mixing.beta)) +
                                  ", expected 1; use c = 1+beta"});
        }
    } else {
        const auto& tab = std::get<CustomPsi>(mixing.psi_kind);
        bool shape_ok = tab.xs.size() >= 2 && tab.xs.size() == tab.psis.size();
        if (shape_ok) {
            for (std::size_t i = 0; i < tab.xs.size(); ++i) {
                if (!(tab.xs[i] > 0.0) || !(tab.xs[i] < 1.0) ||
                    (i > 0 && !(tab.xs[i] > tab.xs[i - 1]))) {
                    shape_ok = false;
                    break;
                }
                if (!(tab.psis[i] >= 0.0) || !std::isfinite(tab.psis[i])) {
                    shape_ok = false;
                    break;
                }
            }
        }
        if (!shape_ok) {
            issues.push_back({"PsiTableInvalid",
                              "custom psi needs >= 2 knots, xs strictly increasing in (0,1), "
                              "psi values nonnegative"});
        }
        if (!(tab.psi1 > 0.0) || !std::isfinite(tab.psi1)) {
            issues.push_back({"PsiParamOutOfRange", "custom psi1 must be positive"});
        }
        if (shape_ok) {
            QuadratureSpec spec;
            spec.abs_tol = 1e-10;
            spec.rel_tol = 1e-9;
            auto mass = tanh_sinh_01(
                [&](double a, double oma) { return Complex(mixing.density(a, oma), 0.0); }, spec);
            if (std::fabs(mass.value.real() - 1.0) > 1e-6) {
                issues.push_back({"MixingNotNormalized",
                                  "tabulated density integrates to " +
                                      std::to_string(mass.value.real()) + ", expected 1"});
            }
        }
    }
    return issues;
}

std::vector<ValidationIssue> validate(const Config& config) {
    std::vector<ValidationIssue> issues = validate_mixing(config.mixing);

    if (!(config.params.lambda > 0.0) || !std::isfinite(config.params.lambda)) {
        issues.push_back({"NonPositiveLambda", "lambda must be finite and > 0, got " +
                                                   std::to_string(config.params.lambda)});
    }

    const auto& times = config.grid.times;
    if (times.empty()) {
        issues.push_back({"NonIncreasingTimes", "need at least one evaluation time"});
    } else {
        double prev = 0.0;  // t_0 = 0
        for (double t : times) {
            if (!std::isfinite(t) || !(t > prev)) {
                issues.push_back({"NonIncreasingTimes",
                                  "times must be finite and strictly increasing from t_0 = 0"});
                break;
            }
            prev = t;
        }
    }

    if (config.thetas.size() != config.grid.size()) {
        issues.push_back({"LengthMismatch",
                          "theta vector length " + std::to_string(config.thetas.size()) +
                              " does not match number of times " + std::to_string(config.grid.size())});
    }
    for (double th : config.thetas.thetas) {
        if (!std::isfinite(th)) {
            issues.push_back({"LengthMismatch", "theta entries must be finite"});
            break;
        }
    }
    return issues;
}

const Config& checked(const Config& config) {
    auto issues = validate(config);
    if (!issues.empty()) throw ValidationError(std::move(issues));
    return config;
}

}  // namespace rinar
