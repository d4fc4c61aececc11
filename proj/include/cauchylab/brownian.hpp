#ifndef CAUCHYLAB_BROWNIAN_HPP
#define CAUCHYLAB_BROWNIAN_HPP

#include <cstdint>
#include <utility>

#include "cauchylab/rng.hpp"
#include "cauchylab/types.hpp"

// Exit points of standard planar Brownian motion (independent coordinates,
// variance t each) from three domains: the upper half-plane, the vertical
// strip {|Re z| < h}, and the right half-plane.
//
// Half-plane exits are sampled exactly through the hitting-time
// decomposition T = d^2/Z1^2 (reflection principle) followed by a Gaussian
// tangential displacement sqrt(T) Z2 - deliberately never through a Cauchy
// sampler, so the exit law can serve as an independent check of one. The
// strip has no such exact route here and uses an Euler walk with a
// Brownian-bridge crossing correction.

namespace cauchylab {

enum class DomainKind { UpperHalfPlane, Strip, RightHalfPlane };
enum class ExitMethod { Exact, Euler };

struct DomainSpec {
    DomainKind kind = DomainKind::UpperHalfPlane;
    double strip_half_width = 1.0;
    Complex start{0.0, 1.0};

    // Factories validate that the start point is not outside the closure;
    // a start on the boundary itself is allowed and exits immediately.
    static DomainSpec upper_half_plane(Complex start = Complex{0.0, 1.0});
    static DomainSpec strip(double half_width = 1.0, Complex start = Complex{0.0, 0.0});
    static DomainSpec right_half_plane(Complex start = Complex{1.0, 0.0});

    // Distance from the start point to the nearest boundary line (>= 0).
    double start_distance() const;
};

struct ExitSample {
    Complex exit_point;
    DomainSpec domain;
    ExitMethod method = ExitMethod::Exact;
    double step_size = 0.0;        // Euler only
    std::uint64_t steps_taken = 0; // Euler only; 0 for exact
};

// Deterministic core of the exact sampler: given the two standard normals,
// T = d^2/z1^2 and the tangential exit coordinate is start_tan + sqrt(T) z2.
// Half-plane domains only.
ExitSample exact_exit_from_normals(const DomainSpec& domain, double z1, double z2);

ExitSample sample_exit_exact(const DomainSpec& domain, RandomSource& rng);

// Step budget used when the caller passes max_steps = 0. The strip exit time
// has an exponential tail, so 50/dt leaves non-exit probability far below
// any gate in this project.
std::uint64_t default_max_steps(double dt);

// Gaussian increments of variance dt per coordinate. After each
// interior-to-interior step a Brownian-bridge crossing is accepted with
// probability exp(-2 d_k d_{k+1}/dt) per boundary line (nearest line first);
// overshoot steps are placed at the first line crossed along the segment.
// Throws MaxStepsError if the walk does not exit within the budget.
ExitSample sample_exit_euler(const DomainSpec& domain, double dt, RandomSource& rng,
                             std::uint64_t max_steps = 0);

// Splits a strip exit into the side hit (-1 or +1) and the transverse
// coordinate Im(exit). Throws MapDomainError for non-strip samples.
std::pair<int, double> strip_exit_components(const ExitSample& s);

}  // namespace cauchylab

#endif
