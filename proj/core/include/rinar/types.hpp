#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "rinar/errors.hpp"

namespace rinar {

/// psi(x) = C x^a on (0,1); the mixing coefficient is then Beta(a+1, beta+1).
struct BetaFormPsi {
    double a_param = 0.0;
};

/// psi(x) = c on (0,1); normalization forces c = 1 + beta.
struct ConstantPsi {
    double c = 1.0;
};

/// psi tabulated on (0,1) with linear interpolation between knots.
/// The limit at 1 cannot be inferred reliably from a table, so psi1 is
/// supplied explicitly.
struct CustomPsi {
    std::vector<double> xs;    // strictly increasing, inside (0,1)
    std::vector<double> psis;  // psi values at xs, nonnegative
    double psi1 = 1.0;
};

using PsiKind = std::variant<BetaFormPsi, ConstantPsi, CustomPsi>;

/// Law of the random thinning coefficient: density psi(x) (1-x)^beta on (0,1)
/// with beta > -1 and psi(x) -> psi1 > 0 as x -> 1.
struct MixingLaw {
    double beta = 0.0;
    PsiKind psi_kind = BetaFormPsi{};

    /// psi evaluated at x in (0,1).
    double psi(double x) const;

    /// Limit of psi at 1 (the stable-scale ingredient psi_1).
    double psi1() const;

    /// Density psi(x)(1-x)^beta; `one_minus_x` is passed separately so the
    /// endpoint singularity is evaluated without cancellation.
    double density(double x, double one_minus_x) const;

    /// Upper bound for psi over (0,1), used by the rejection sampler.
    double psi_sup() const;
};

/// Poisson innovation rate.
struct ModelParams {
    double lambda = 1.0;
};

/// Ordered evaluation times 0 < t_1 < ... < t_m (t_0 = 0 implicitly).
struct TimeGrid {
    std::vector<double> times;

    std::size_t size() const noexcept { return times.size(); }
};

/// Frequency vector (theta_1, ..., theta_m), one entry per grid time.
struct ThetaVec {
    std::vector<double> thetas;

    std::size_t size() const noexcept { return thetas.size(); }
};

/// floor(n*t) with a half-ulp guard so that values like 3*0.9999999999999999
/// land on the intended integer. Block bounds enter sums as exact integers.
std::int64_t floor_scaled(std::int64_t n, double t);

/// Per-block frequency coefficients c_1..c_m multiplying the increment blocks
/// (floor(n t_{l-1}), floor(n t_l)] inside the CF exponents, together with the
/// integer block bounds floor(n t_0) .. floor(n t_m).
///
/// The same container serves the tail coefficients theta_l + ... + theta_m of
/// the joint CF and the scaled per-block coefficients of the limit
/// functionals; only the coefficient values differ.
struct BlockCoeffs {
    std::vector<double> coeffs;        // size m
    std::vector<std::int64_t> bounds;  // size m+1, bounds[0] == 0, nondecreasing

    std::size_t blocks() const noexcept { return coeffs.size(); }
    std::int64_t total_length() const noexcept { return bounds.empty() ? 0 : bounds.back(); }

    /// Bounds floor(n t_0)..floor(n t_m) for a validated grid.
    static std::vector<std::int64_t> bounds_for(std::int64_t n, const TimeGrid& grid);

    /// Coefficients for the joint CF of (S_{t_1}, ..., S_{t_m}):
    /// c_l = theta_l + ... + theta_m.
    static BlockCoeffs tails(std::int64_t n, const TimeGrid& grid, const ThetaVec& thetas);

    /// Coefficients scaling * theta_l applied blockwise (the limit-theorem
    /// exponents evaluate the same formula at these coefficients).
    static BlockCoeffs scaled(std::int64_t n, const TimeGrid& grid, const ThetaVec& thetas,
                              double scaling);
};

/// One Monte Carlo replicate of the aggregated process at the grid times.
struct PanelSample {
    std::vector<double> s_values;  // size m
    std::uint64_t seed = 0;
    std::int64_t N = 1;
    std::int64_t n = 1;
};

/// Validated bundle of model inputs.
struct Config {
    MixingLaw mixing;
    ModelParams params;
    TimeGrid grid;
    ThetaVec thetas;
};

/// Structural checks; empty result means the configuration is valid.
/// Checking an already-valid configuration returns it unchanged (the checks
/// are pure), so validation is idempotent.
std::vector<ValidationIssue> validate(const Config& config);

/// Convenience throwing wrapper: returns `config` unchanged or throws
/// ValidationError with the full issue list.
const Config& checked(const Config& config);

/// Validation of the mixing law alone (normalization, beta range, psi table).
std::vector<ValidationIssue> validate_mixing(const MixingLaw& mixing);

}  // namespace rinar
