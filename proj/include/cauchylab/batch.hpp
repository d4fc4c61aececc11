#ifndef CAUCHYLAB_BATCH_HPP
#define CAUCHYLAB_BATCH_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cauchylab/brownian.hpp"
#include "cauchylab/rng.hpp"
#include "cauchylab/types.hpp"

// Monte Carlo batch kernels, in two builds of the same contracts:
//
//   serial::*  straightforward single-stream loops, the reference
//              implementation the tests trust;
//   par::*     OpenMP kernels that split the batch across `workers` RNG
//              streams and merge per-stream results in stream order.
//
// The parallel kernels are deterministic in (seed, stream_base, workers)
// and independent of thread scheduling: stream w always owns the same slice
// of the output. par with workers = 1 reproduces serial bit for bit, which
// is what the equivalence tests pin down; tools/bench_kernels compares the
// two for speed.

namespace cauchylab {

struct BatchPlan {
    std::uint64_t seed = 1;
    std::uint64_t stream_base = 0;  // streams [stream_base, stream_base + workers) are used
    int workers = 1;
};

// Half-open index range [first, last) owned by stream w out of `workers`.
std::pair<std::size_t, std::size_t> batch_slice(std::size_t n, int workers, int w);

struct ExitBatch {
    std::vector<Complex> exit_points;
    std::vector<std::uint64_t> steps;
    std::uint64_t failed_paths = 0;  // Euler paths that hit the step budget
};

struct TransformBatch {
    std::vector<double> values;
    std::uint64_t dropped = 0;  // inputs that landed on a pole / at infinity
};

using ExtendedMap = std::function<ExtendedReal(ExtendedReal)>;

namespace serial {

std::vector<double> cauchy_batch(std::size_t n, RandomSource& rng);
std::vector<double> sech_batch(std::size_t n, RandomSource& rng);
ExitBatch exit_exact_batch(const DomainSpec& domain, std::size_t n, RandomSource& rng);
ExitBatch exit_euler_batch(const DomainSpec& domain, double dt, std::uint64_t max_steps,
                           std::size_t n, RandomSource& rng);
TransformBatch transform_batch(const ExtendedMap& map, std::span<const double> input);

}  // namespace serial

namespace par {

std::vector<double> cauchy_batch(std::size_t n, const BatchPlan& plan);
std::vector<double> sech_batch(std::size_t n, const BatchPlan& plan);
ExitBatch exit_exact_batch(const DomainSpec& domain, std::size_t n, const BatchPlan& plan);
ExitBatch exit_euler_batch(const DomainSpec& domain, double dt, std::uint64_t max_steps,
                           std::size_t n, const BatchPlan& plan);
TransformBatch transform_batch(const ExtendedMap& map, std::span<const double> input,
                               int workers);

}  // namespace par

}  // namespace cauchylab

#endif
