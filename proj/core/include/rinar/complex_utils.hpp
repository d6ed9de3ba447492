#pragma once

#include <cmath>
#include <complex>

namespace rinar {

using Complex = std::complex<double>;

/// e^{ix} for real x.
inline Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

/// e^{ix} - 1, accurate for small |x|: (-2 sin^2(x/2), sin x).
inline Complex cis_m1(double x) {
    double s = std::sin(0.5 * x);
    return {-2.0 * s * s, std::sin(x)};
}

/// e^{ix} - 1 - ix, the centered phase factor of the CF exponents.
inline Complex cis_m1_mix(double x) {
    Complex e = cis_m1(x);
    return {e.real(), e.imag() - x};
}

/// e^z - 1 without cancellation for small |z|.
/// Splits z = x + iy: e^z - 1 = expm1(x) cos y - 2 sin^2(y/2) + i e^x sin y.
inline Complex expm1c(const Complex& z) {
    double x = z.real();
    double y = z.imag();
    double sy = std::sin(0.5 * y);
    double re = std::expm1(x) * std::cos(y) - 2.0 * sy * sy;
    double im = std::exp(x) * std::sin(y);
    return {re, im};
}

/// e^z where Re z is known to be <= 0 up to roundoff; clamps the real part
/// so the modulus never exceeds 1.
inline Complex exp_nonexpanding(const Complex& z) {
    double x = z.real() > 0.0 ? 0.0 : z.real();
    double m = std::exp(x);
    return {m * std::cos(z.imag()), m * std::sin(z.imag())};
}

}  // namespace rinar
