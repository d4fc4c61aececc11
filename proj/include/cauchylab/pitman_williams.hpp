#ifndef CAUCHYLAB_PITMAN_WILLIAMS_HPP
#define CAUCHYLAB_PITMAN_WILLIAMS_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cauchylab/types.hpp"

// The rational family
//
//   f(z) = a z - b/z + sum_n [ b_n/(a_n - z) - a_n b_n/(a_n^2 + 1) ],
//
// normalized by c = a + b + sum_n b_n/(a_n^2 + 1). Whenever every a_n is
// nonzero and all nonzero constants a, b, b_n share one sign, f(z)/c maps the
// upper half-plane into itself, fixes i, and preserves the standard Cauchy
// law on the real line. Only finite term lists are supported here; the
// infinite-sum variants of the family are outside what this library can
// verify numerically at desk scale.

namespace cauchylab {

// More terms than this is rejected by validation.
inline constexpr std::size_t kMaxPwTerms = 64;

struct PWParams {
    double a = 0.0;
    double b = 0.0;
    std::vector<std::pair<double, double>> terms;  // (a_n, b_n)
};

// Empty result means the parameters are valid; otherwise one entry per
// violated condition.
inline std::vector<std::string> pw_validate(const PWParams& p) {
    std::vector<std::string> violations;
    if (!std::isfinite(p.a) || !std::isfinite(p.b)) violations.push_back("non-finite constant");
    bool any_nonzero = (p.a != 0.0) || (p.b != 0.0);
    int sign = 0;
    auto check_sign = [&](double v) {
        if (v == 0.0) return true;
        const int s = v > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        return s == sign;
    };
    bool signs_ok = check_sign(p.a) && check_sign(p.b);
    for (std::size_t n = 0; n < p.terms.size(); ++n) {
        const auto [an, bn] = p.terms[n];
        if (!std::isfinite(an) || !std::isfinite(bn)) violations.push_back("non-finite constant");
        if (an == 0.0) violations.push_back("a_" + std::to_string(n + 1) + " = 0");
        if (bn != 0.0) any_nonzero = true;
        signs_ok = check_sign(bn) && signs_ok;
    }
    if (!signs_ok) violations.push_back("mixed signs among nonzero constants");
    if (!any_nonzero) violations.push_back("all constants zero (map is constant)");
    if (p.terms.size() > kMaxPwTerms)
        violations.push_back("more than " + std::to_string(kMaxPwTerms) + " terms");
    return violations;
}

inline bool pw_is_valid(const PWParams& p) { return pw_validate(p).empty(); }

// Common sign of the nonzero constants: +1 or -1 for valid parameters.
inline int pw_sign(const PWParams& p) {
    if (p.a != 0.0) return p.a > 0.0 ? 1 : -1;
    if (p.b != 0.0) return p.b > 0.0 ? 1 : -1;
    for (const auto& [an, bn] : p.terms)
        if (bn != 0.0) return bn > 0.0 ? 1 : -1;
    return 0;
}

// c = a + b + sum_n b_n/(a_n^2 + 1); same sign as the constants, never zero
// for valid parameters.
inline double pw_normalizer(const PWParams& p) {
    if (!pw_is_valid(p)) throw InvalidParams("pw_normalizer: invalid parameters");
    double c = p.a + p.b;
    for (const auto& [an, bn] : p.terms) c += bn / (an * an + 1.0);
    return c;
}

// Normalized map f(x)/c on the extended real line. Poles (x = 0 when b != 0,
// x = a_n when b_n != 0) and overflow both land on the point at infinity.
inline ExtendedReal pw_eval(const PWParams& p, ExtendedReal x) {
    const double c = pw_normalizer(p);
    if (x.is_infinite()) {
        if (p.a != 0.0) return ExtendedReal::infinity();
        double f = 0.0;
        for (const auto& [an, bn] : p.terms) f -= an * bn / (an * an + 1.0);
        return f / c;
    }
    const double v = x.value();
    double f = p.a * v;
    if (p.b != 0.0) {
        if (v == 0.0) return ExtendedReal::infinity();
        f -= p.b / v;
    }
    for (const auto& [an, bn] : p.terms) {
        if (bn == 0.0) continue;
        if (v == an) return ExtendedReal::infinity();
        f += bn / (an - v) - an * bn / (an * an + 1.0);
    }
    if (!std::isfinite(f)) return ExtendedReal::infinity();
    return f / c;
}

// Complex overload; evaluation within kPoleTolerance of a real pole throws.
inline Complex pw_eval(const PWParams& p, Complex z) {
    const double c = pw_normalizer(p);
    Complex f = p.a * z;
    if (p.b != 0.0) {
        if (std::abs(z) <= kPoleTolerance) throw PoleError("pw_eval: pole at 0");
        f -= p.b / z;
    }
    for (const auto& [an, bn] : p.terms) {
        if (bn == 0.0) continue;
        if (std::abs(z - an) <= kPoleTolerance)
            throw PoleError("pw_eval: pole at a_n");
        f += bn / (an - z) - an * bn / (an * an + 1.0);
    }
    return f / c;
}

// The two reference members of the family used throughout the tests:
// (1/2, 1/2, []) is the Newton map of x^2+1, (0, 0, [(1,1)]) normalizes to
// the Moebius map (1+x)/(1-x).
inline PWParams pw_boole_params() { return {0.5, 0.5, {}}; }
inline PWParams pw_moebius_params() { return {0.0, 0.0, {{1.0, 1.0}}}; }

}  // namespace cauchylab

#endif
