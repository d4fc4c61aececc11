#ifndef CAUCHYLAB_SAMPLERS_HPP
#define CAUCHYLAB_SAMPLERS_HPP

#include <cmath>
#include <numbers>

#include "cauchylab/rng.hpp"

// Exact inverse-CDF samplers for the two reference laws. One uniform per
// variate, and the uniforms come from the open interval, so the transforms
// below never see an endpoint singularity.

namespace cauchylab {

// Quantile of the standard Cauchy law, u in (0,1).
inline double cauchy_quantile(double u) {
    return std::tan(std::numbers::pi * (u - 0.5));
}

// Quantile of the hyperbolic secant law with density sech(pi y/2)/2,
// u in (0,1): y = (2/pi) ln tan(pi u/2).
inline double sech_quantile(double u) {
    return 2.0 / std::numbers::pi * std::log(std::tan(std::numbers::pi * u / 2.0));
}

inline double sample_cauchy(RandomSource& rng) { return cauchy_quantile(rng.uniform_open01()); }

inline double sample_sech(RandomSource& rng) { return sech_quantile(rng.uniform_open01()); }

}  // namespace cauchylab

#endif
