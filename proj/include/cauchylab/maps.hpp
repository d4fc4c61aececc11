#ifndef CAUCHYLAB_MAPS_HPP
#define CAUCHYLAB_MAPS_HPP

#include <cmath>
#include <numbers>

#include "cauchylab/types.hpp"

// The analytic maps this library is built around. All of them are total on
// their stated domains: real poles map to the point at infinity, complex
// evaluations near a pole throw PoleError instead of returning a huge value.

namespace cauchylab {

// Complex evaluations closer than this to a pole are rejected rather than
// computed; closer in, cancellation makes the result meaningless.
inline constexpr double kPoleTolerance = 1e-12;

// phi(x) = (x - 1/x)/2, the Newton iteration map of x^2 + 1.
// Total on R u {inf}: phi(0) = inf, phi(inf) = inf.
inline ExtendedReal boole(ExtendedReal x) {
    if (x.is_infinite()) return ExtendedReal::infinity();
    const double v = x.value();
    if (v == 0.0) return ExtendedReal::infinity();
    return 0.5 * (v - 1.0 / v);  // overflow near 0 sanitizes to infinity
}

// Complex phi; maps the upper half-plane into itself and fixes i.
inline Complex boole_c(Complex z) {
    if (std::abs(z) <= kPoleTolerance) throw PoleError("boole_c: pole at 0");
    return 0.5 * (z - 1.0 / z);
}

// psi(x) = (x^3 - 3x)/(3x^2 - 1), the Simpson variant of the same iteration.
// The poles +-1/sqrt(3) are irrational, so a vanishing denominator is
// detected by magnitude rather than by exact equality.
inline ExtendedReal simpson_newton(ExtendedReal x) {
    if (x.is_infinite()) return ExtendedReal::infinity();
    const double v = x.value();
    const double den = 3.0 * v * v - 1.0;
    if (std::abs(den) <= kPoleTolerance) return ExtendedReal::infinity();
    return v * (v * v - 3.0) / den;
}

inline Complex simpson_newton_c(Complex z) {
    const Complex den = 3.0 * z * z - 1.0;
    if (std::abs(den) <= kPoleTolerance) throw PoleError("simpson_newton_c: pole at +-1/sqrt(3)");
    return z * (z * z - 3.0) / den;
}

// F(z) = (i - z)/(i + z): upper half-plane -> unit disk, boundary to boundary.
inline Complex cayley(Complex z) {
    const Complex i{0.0, 1.0};
    if (std::abs(z + i) <= kPoleTolerance) throw PoleError("cayley: pole at -i");
    return (i - z) / (i + z);
}

// G(w) = i(1 - w)/(1 + w), the inverse of cayley.
inline Complex inverse_cayley(Complex w) {
    if (std::abs(w + 1.0) <= kPoleTolerance) throw PoleError("inverse_cayley: pole at -1");
    return Complex{0.0, 1.0} * (1.0 - w) / (1.0 + w);
}

// rho(w) = -w^2 on the unit circle.
inline Complex doubling(Complex w) {
    if (std::abs(std::abs(w) - 1.0) > 1e-9)
        throw MapDomainError("doubling: input is not on the unit circle");
    return -(w * w);
}

// |F(phi(G(z))) - (-z^2)|. The composition collapses to -z^2 identically on
// the closed disk minus {+-1}; the returned defect measures floating-point
// departure from that identity.
inline double conjugacy_defect(Complex z) {
    if (std::abs(z) > 1.0 + kPoleTolerance)
        throw MapDomainError("conjugacy_defect: input outside the closed unit disk");
    return std::abs(cayley(boole_c(inverse_cayley(z))) - (-(z * z)));
}

// f(z) = Log((e^z + e^-z)/2) on the strip |Im z| < pi/2, computed through
// ln cosh / atan2 so that large |Re z| does not overflow:
//   |cosh z|^2 = cosh^2(x) - sin^2(y),  arg cosh z = atan2(tanh x sin y, cos y).
inline Complex strip_automorphism(Complex z) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    const double x = z.real(), y = z.imag();
    if (!(std::abs(y) < half_pi))
        throw MapDomainError("strip_automorphism: input outside the strip |Im z| < pi/2");
    const double ax = std::abs(x);
    const double ln_cosh_x = ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
    const double sy_over_cosh = std::sin(y) / std::cosh(ax);  // cosh overflow -> 0, harmless
    const double re = ln_cosh_x + 0.5 * std::log1p(-sy_over_cosh * sy_over_cosh);
    const double im = std::atan2(std::tanh(x) * std::sin(y), std::cos(y));
    return {re, im};
}

// g(x) = (2/pi) ln|sinh(pi x/2)|. Even in x; log-singular at 0.
inline double sech_map(double x) {
    if (x == 0.0) throw PoleError("sech_map: singularity at 0");
    const double t = std::numbers::pi * std::abs(x) / 2.0;
    double ln_sinh;
    if (t < 1.0) {
        ln_sinh = std::log(std::sinh(t));
    } else {
        ln_sinh = t + std::log1p(-std::exp(-2.0 * t)) - std::numbers::ln2;
    }
    return 2.0 / std::numbers::pi * ln_sinh;
}

// h(x) = (2/pi) ln|x|.
inline double log_abs_map(double x) {
    if (x == 0.0) throw PoleError("log_abs_map: singularity at 0");
    return 2.0 / std::numbers::pi * std::log(std::abs(x));
}

}  // namespace cauchylab

#endif
