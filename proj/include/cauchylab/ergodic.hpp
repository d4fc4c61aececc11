#ifndef CAUCHYLAB_ERGODIC_HPP
#define CAUCHYLAB_ERGODIC_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cauchylab/pitman_williams.hpp"
#include "cauchylab/stats.hpp"
#include "cauchylab/types.hpp"

// Long orbits x_{k+1} = T(x_k) on the extended real line, with guards for
// the (countable, hence Lebesgue-null) set of starting points whose orbit
// reaches the pole or infinity in finitely many steps. Guard events are
// reported through the result, never silently papered over. Orbits are
// inherently sequential; parallelism in this project lives one level up,
// across independent experiments.

namespace cauchylab {

enum class OrbitMap { Boole, SimpsonNewton, PitmanWilliams };

struct OrbitConfig {
    OrbitMap map = OrbitMap::Boole;
    PWParams pw{};          // used when map == PitmanWilliams
    double x0 = 2.0;
    std::size_t length = 1;
    double blowup_guard = 1e300;  // |x| above this stops the orbit
    double pole_guard = 1e-300;   // |x| below this stops the orbit
};

struct OrbitResult {
    std::vector<double> samples;  // orbit order, starting with x0
    std::map<std::string, double> birkhoff_values;
    bool terminated_early = false;
    std::size_t termination_step = 0;  // index of the value that could not be produced
};

struct Observable {
    std::string name;
    std::function<double(double)> fn;
};

// f(t) = 1/(1+t^2) and f(t) = 1{0 <= t <= 1}; their Birkhoff averages have
// the closed-form limits 1/2 and 1/4 under the standard Cauchy law.
std::span<const Observable> builtin_observables();

OrbitResult orbit(const OrbitConfig& cfg, std::span<const Observable> observables = {});

// (1/n) sum_k f(T^k(x0)). Throws EarlyTermination if a guard fires.
double birkhoff_average(const OrbitConfig& cfg, const std::function<double(double)>& observable);

// The orbit's empirical distribution. Throws EarlyTermination if a guard fires.
EmpiricalDistribution orbit_empirical_law(const OrbitConfig& cfg);

}  // namespace cauchylab

#endif
