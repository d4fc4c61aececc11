#include <cmath>

#include "cauchylab/batch.hpp"
#include "cauchylab/samplers.hpp"

// Reference kernels: one RNG stream, one plain loop each. The parallel
// kernels must reproduce these exactly when run with a single worker.

namespace cauchylab {

std::pair<std::size_t, std::size_t> batch_slice(std::size_t n, int workers, int w) {
    if (workers < 1 || w < 0 || w >= workers) throw InvalidParams("batch_slice: bad worker index");
    const auto k = static_cast<std::size_t>(workers);
    const auto i = static_cast<std::size_t>(w);
    const std::size_t base = n / k, extra = n % k;
    const std::size_t first = i * base + std::min(i, extra);
    const std::size_t count = base + (i < extra ? 1 : 0);
    return {first, first + count};
}

namespace serial {

std::vector<double> cauchy_batch(std::size_t n, RandomSource& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = sample_cauchy(rng);
    return out;
}

std::vector<double> sech_batch(std::size_t n, RandomSource& rng) {
    std::vector<double> out(n);
    for (auto& x : out) x = sample_sech(rng);
    return out;
}

ExitBatch exit_exact_batch(const DomainSpec& domain, std::size_t n, RandomSource& rng) {
    ExitBatch out;
    out.exit_points.reserve(n);
    out.steps.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        out.exit_points.push_back(sample_exit_exact(domain, rng).exit_point);
    return out;
}

ExitBatch exit_euler_batch(const DomainSpec& domain, double dt, std::uint64_t max_steps,
                           std::size_t n, RandomSource& rng) {
    ExitBatch out;
    out.exit_points.reserve(n);
    out.steps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            const ExitSample s = sample_exit_euler(domain, dt, rng, max_steps);
            out.exit_points.push_back(s.exit_point);
            out.steps.push_back(s.steps_taken);
        } catch (const MaxStepsError&) {
            ++out.failed_paths;
        }
    }
    return out;
}

TransformBatch transform_batch(const ExtendedMap& map, std::span<const double> input) {
    TransformBatch out;
    out.values.reserve(input.size());
    for (double x : input) {
        const ExtendedReal y = map(ExtendedReal(x));
        if (y.is_infinite())
            ++out.dropped;  // pole hits are a null event; count, never crash
        else
            out.values.push_back(y.value());
    }
    return out;
}

}  // namespace serial
}  // namespace cauchylab
