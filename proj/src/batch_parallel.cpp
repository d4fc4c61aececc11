#include <algorithm>
#include <cmath>

#include "cauchylab/batch.hpp"
#include "cauchylab/samplers.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// OpenMP kernels. Stream w of `plan.workers` owns the output slice
// batch_slice(n, workers, w) and draws from RandomSource(seed,
// stream_base + w), so the merged result depends only on the plan and never
// on thread scheduling. Worker counts above the hardware thread count are
// allowed; they only change the stream partition, not correctness.

namespace cauchylab::par {

namespace {

int thread_count(int workers) {
#ifdef _OPENMP
    return std::clamp(workers, 1, omp_get_max_threads());
#else
    return 1;
#endif
}

void check_plan(const BatchPlan& plan) {
    if (plan.workers < 1) throw InvalidParams("BatchPlan: workers must be >= 1");
}

}  // namespace

std::vector<double> cauchy_batch(std::size_t n, const BatchPlan& plan) {
    check_plan(plan);
    std::vector<double> out(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(plan.workers))
    for (int w = 0; w < plan.workers; ++w) {
        RandomSource rng(plan.seed, plan.stream_base + static_cast<std::uint64_t>(w));
        const auto [first, last] = batch_slice(n, plan.workers, w);
        for (std::size_t i = first; i < last; ++i) out[i] = sample_cauchy(rng);
    }
    return out;
}

std::vector<double> sech_batch(std::size_t n, const BatchPlan& plan) {
    check_plan(plan);
    std::vector<double> out(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(plan.workers))
    for (int w = 0; w < plan.workers; ++w) {
        RandomSource rng(plan.seed, plan.stream_base + static_cast<std::uint64_t>(w));
        const auto [first, last] = batch_slice(n, plan.workers, w);
        for (std::size_t i = first; i < last; ++i) out[i] = sample_sech(rng);
    }
    return out;
}

ExitBatch exit_exact_batch(const DomainSpec& domain, std::size_t n, const BatchPlan& plan) {
    check_plan(plan);
    ExitBatch out;
    out.exit_points.resize(n);
    out.steps.assign(n, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(plan.workers))
    for (int w = 0; w < plan.workers; ++w) {
        RandomSource rng(plan.seed, plan.stream_base + static_cast<std::uint64_t>(w));
        const auto [first, last] = batch_slice(n, plan.workers, w);
        for (std::size_t i = first; i < last; ++i)
            out.exit_points[i] = sample_exit_exact(domain, rng).exit_point;
    }
    return out;
}

ExitBatch exit_euler_batch(const DomainSpec& domain, double dt, std::uint64_t max_steps,
                           std::size_t n, const BatchPlan& plan) {
    check_plan(plan);
    // failed paths make slice sizes data-dependent, so collect per stream
    // and concatenate in stream order
    std::vector<ExitBatch> parts(static_cast<std::size_t>(plan.workers));
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(plan.workers))
    for (int w = 0; w < plan.workers; ++w) {
        RandomSource rng(plan.seed, plan.stream_base + static_cast<std::uint64_t>(w));
        const auto [first, last] = batch_slice(n, plan.workers, w);
        ExitBatch& part = parts[static_cast<std::size_t>(w)];
        part.exit_points.reserve(last - first);
        part.steps.reserve(last - first);
        for (std::size_t i = first; i < last; ++i) {
            try {
                const ExitSample s = sample_exit_euler(domain, dt, rng, max_steps);
                part.exit_points.push_back(s.exit_point);
                part.steps.push_back(s.steps_taken);
            } catch (const MaxStepsError&) {
                ++part.failed_paths;
            }
        }
    }
    ExitBatch out;
    out.exit_points.reserve(n);
    out.steps.reserve(n);
    for (const ExitBatch& part : parts) {
        out.exit_points.insert(out.exit_points.end(), part.exit_points.begin(),
                               part.exit_points.end());
        out.steps.insert(out.steps.end(), part.steps.begin(), part.steps.end());
        out.failed_paths += part.failed_paths;
    }
    return out;
}

TransformBatch transform_batch(const ExtendedMap& map, std::span<const double> input,
                               int workers) {
    if (workers < 1) throw InvalidParams("transform_batch: workers must be >= 1");
    std::vector<TransformBatch> parts(static_cast<std::size_t>(workers));
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(workers))
    for (int w = 0; w < workers; ++w) {
        const auto [first, last] = batch_slice(input.size(), workers, w);
        TransformBatch& part = parts[static_cast<std::size_t>(w)];
        part.values.reserve(last - first);
        for (std::size_t i = first; i < last; ++i) {
            const ExtendedReal y = map(ExtendedReal(input[i]));
            if (y.is_infinite())
                ++part.dropped;
            else
                part.values.push_back(y.value());
        }
    }
    TransformBatch out;
    out.values.reserve(input.size());
    for (const TransformBatch& part : parts) {
        out.values.insert(out.values.end(), part.values.begin(), part.values.end());
        out.dropped += part.dropped;
    }
    return out;
}

}  // namespace cauchylab::par
