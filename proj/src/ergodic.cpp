#include "cauchylab/ergodic.hpp"

#include <array>
#include <cmath>

#include "cauchylab/maps.hpp"

namespace cauchylab {

namespace {

ExtendedReal apply_map(const OrbitConfig& cfg, ExtendedReal x) {
    switch (cfg.map) {
        case OrbitMap::Boole: return boole(x);
        case OrbitMap::SimpsonNewton: return simpson_newton(x);
        case OrbitMap::PitmanWilliams: return pw_eval(cfg.pw, x);
    }
    return x;
}

void validate(const OrbitConfig& cfg) {
    if (cfg.length < 1) throw InvalidParams("orbit: length must be >= 1");
    if (!(cfg.blowup_guard > 0.0) || !(cfg.pole_guard > 0.0))
        throw InvalidParams("orbit: guards must be positive");
    if (!std::isfinite(cfg.x0)) throw InvalidParams("orbit: x0 must be finite");
    switch (cfg.map) {
        case OrbitMap::Boole:
            if (cfg.x0 == 0.0) throw InvalidParams("orbit: x0 = 0 is the pole of the map");
            break;
        case OrbitMap::SimpsonNewton:
            if (std::abs(3.0 * cfg.x0 * cfg.x0 - 1.0) <= kPoleTolerance)
                throw InvalidParams("orbit: x0 = +-1/sqrt(3) is a pole of the map");
            break;
        case OrbitMap::PitmanWilliams:
            if (!pw_is_valid(cfg.pw)) throw InvalidParams("orbit: invalid map parameters");
            if (pw_eval(cfg.pw, ExtendedReal(cfg.x0)).is_infinite())
                throw InvalidParams("orbit: x0 is a pole of the map");
            break;
    }
}

}  // namespace

std::span<const Observable> builtin_observables() {
    static const std::array<Observable, 2> obs = {
        Observable{"inv_quadratic", [](double t) { return 1.0 / (1.0 + t * t); }},
        Observable{"unit_indicator", [](double t) { return (t >= 0.0 && t <= 1.0) ? 1.0 : 0.0; }},
    };
    return {obs.data(), obs.size()};
}

OrbitResult orbit(const OrbitConfig& cfg, std::span<const Observable> observables) {
    validate(cfg);
    OrbitResult result;
    result.samples.reserve(cfg.length);
    result.samples.push_back(cfg.x0);

    std::vector<double> acc(observables.size(), 0.0);
    for (std::size_t i = 0; i < observables.size(); ++i) acc[i] = observables[i].fn(cfg.x0);

    for (std::size_t k = 1; k < cfg.length; ++k) {
        const double x = result.samples.back();
        // values inside (pole_guard, blowup_guard) are always kept; outside
        // the band the orbit has numerically reached the exceptional set
        if (std::abs(x) < cfg.pole_guard || std::abs(x) > cfg.blowup_guard) {
            result.terminated_early = true;
            result.termination_step = k;
            break;
        }
        const ExtendedReal next = apply_map(cfg, ExtendedReal(x));
        if (next.is_infinite()) {
            result.terminated_early = true;
            result.termination_step = k;
            break;
        }
        const double v = next.value();
        result.samples.push_back(v);
        for (std::size_t i = 0; i < observables.size(); ++i) acc[i] += observables[i].fn(v);
    }

    const auto n = static_cast<double>(result.samples.size());
    for (std::size_t i = 0; i < observables.size(); ++i)
        result.birkhoff_values[observables[i].name] = acc[i] / n;
    return result;
}

double birkhoff_average(const OrbitConfig& cfg, const std::function<double(double)>& observable) {
    const Observable obs{"observable", observable};
    const OrbitResult r = orbit(cfg, {&obs, 1});
    if (r.terminated_early) throw EarlyTermination(r.termination_step);
    return r.birkhoff_values.at("observable");
}

EmpiricalDistribution orbit_empirical_law(const OrbitConfig& cfg) {
    OrbitResult r = orbit(cfg);
    if (r.terminated_early) throw EarlyTermination(r.termination_step);
    return EmpiricalDistribution(std::move(r.samples));
}

}  // namespace cauchylab
