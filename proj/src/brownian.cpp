#include "cauchylab/brownian.hpp"

#include <algorithm>
#include <cmath>

namespace cauchylab {

namespace {

// Signed distance from z to the domain boundary, positive inside.
// For the strip this is the distance to the nearer of the two lines.
double interior_distance(const DomainSpec& d, Complex z) {
    switch (d.kind) {
        case DomainKind::UpperHalfPlane: return z.imag();
        case DomainKind::RightHalfPlane: return z.real();
        case DomainKind::Strip: return d.strip_half_width - std::abs(z.real());
    }
    return 0.0;
}

void validate_start(const DomainSpec& d) {
    if (d.kind == DomainKind::Strip && !(d.strip_half_width > 0.0))
        throw InvalidParams("DomainSpec: strip half-width must be positive");
    if (!std::isfinite(d.start.real()) || !std::isfinite(d.start.imag()))
        throw InvalidParams("DomainSpec: start point must be finite");
    if (interior_distance(d, d.start) < 0.0)
        throw InvalidParams("DomainSpec: start point lies outside the domain");
}

}  // namespace

DomainSpec DomainSpec::upper_half_plane(Complex start) {
    DomainSpec d{DomainKind::UpperHalfPlane, 1.0, start};
    validate_start(d);
    return d;
}

DomainSpec DomainSpec::strip(double half_width, Complex start) {
    DomainSpec d{DomainKind::Strip, half_width, start};
    validate_start(d);
    return d;
}

DomainSpec DomainSpec::right_half_plane(Complex start) {
    DomainSpec d{DomainKind::RightHalfPlane, 1.0, start};
    validate_start(d);
    return d;
}

double DomainSpec::start_distance() const { return interior_distance(*this, start); }

ExitSample exact_exit_from_normals(const DomainSpec& domain, double z1, double z2) {
    if (domain.kind == DomainKind::Strip)
        throw MapDomainError("exact sampler: no exact decomposition for the strip");
    const double d = domain.start_distance();
    // T = d^2 / z1^2; the exit point sits on the boundary line at the start's
    // tangential coordinate displaced by sqrt(T) z2.
    const double sqrt_t = d / std::abs(z1);
    Complex exit;
    if (domain.kind == DomainKind::UpperHalfPlane)
        exit = Complex{domain.start.real() + sqrt_t * z2, 0.0};
    else
        exit = Complex{0.0, domain.start.imag() + sqrt_t * z2};
    return {exit, domain, ExitMethod::Exact, 0.0, 0};
}

ExitSample sample_exit_exact(const DomainSpec& domain, RandomSource& rng) {
    if (domain.start_distance() == 0.0)
        return {domain.start, domain, ExitMethod::Exact, 0.0, 0};
    auto [z1, z2] = rng.normal_pair();
    while (z1 == 0.0) z1 = rng.normal();  // measure-zero, but keep T finite
    return exact_exit_from_normals(domain, z1, z2);
}

std::uint64_t default_max_steps(double dt) {
    return static_cast<std::uint64_t>(std::ceil(50.0 / dt));
}

ExitSample sample_exit_euler(const DomainSpec& domain, double dt, RandomSource& rng,
                             std::uint64_t max_steps) {
    if (!(dt > 0.0) || dt > 1e-2)
        throw InvalidParams("sample_exit_euler: dt must lie in (0, 1e-2]");
    if (max_steps == 0) max_steps = default_max_steps(dt);

    // Boundary lines as (coordinate selector, line position, inward sign):
    // the interior satisfies sign * (coord - line) > 0.
    struct Line {
        bool vertical;  // constrains Re; otherwise Im
        double pos;
        double inward;
    };
    Line lines[2];
    int n_lines = 0;
    switch (domain.kind) {
        case DomainKind::UpperHalfPlane: lines[n_lines++] = {false, 0.0, +1.0}; break;
        case DomainKind::RightHalfPlane: lines[n_lines++] = {true, 0.0, +1.0}; break;
        case DomainKind::Strip:
            lines[n_lines++] = {true, +domain.strip_half_width, -1.0};
            lines[n_lines++] = {true, -domain.strip_half_width, +1.0};
            break;
    }
    const auto coord = [](const Line& l, Complex z) { return l.vertical ? z.real() : z.imag(); };
    const auto dist = [&](const Line& l, Complex z) { return l.inward * (coord(l, z) - l.pos); };
    const auto place_on_line = [](const Line& l, Complex z) {
        return l.vertical ? Complex{l.pos, z.imag()} : Complex{z.real(), l.pos};
    };

    Complex pos = domain.start;
    for (int li = 0; li < n_lines; ++li)
        if (dist(lines[li], pos) <= 0.0)
            return {place_on_line(lines[li], pos), domain, ExitMethod::Euler, dt, 0};

    const double sqrt_dt = std::sqrt(dt);
    for (std::uint64_t k = 1; k <= max_steps; ++k) {
        auto [g1, g2] = rng.normal_pair();
        const Complex next = pos + sqrt_dt * Complex{g1, g2};

        // direct overshoot: exit at the first line crossed along the segment
        double first_t = 2.0;
        int first_line = -1;
        for (int li = 0; li < n_lines; ++li) {
            const double d0 = dist(lines[li], pos);
            const double d1 = dist(lines[li], next);
            if (d1 <= 0.0) {
                const double t = d0 / (d0 - d1);
                if (t < first_t) {
                    first_t = t;
                    first_line = li;
                }
            }
        }
        if (first_line >= 0) {
            const Complex hit = pos + first_t * (next - pos);
            return {place_on_line(lines[first_line], hit), domain, ExitMethod::Euler, dt, k};
        }

        // both endpoints interior: Brownian-bridge crossing test per line,
        // nearest line first; acceptance probability exp(-2 d0 d1 / dt)
        int order[2] = {0, 1};
        if (n_lines == 2 && dist(lines[1], next) < dist(lines[0], next)) {
            order[0] = 1;
            order[1] = 0;
        }
        bool crossed = false;
        Complex exit;
        for (int oi = 0; oi < n_lines && !crossed; ++oi) {
            const Line& l = lines[order[oi]];
            const double expo = -2.0 * dist(l, pos) * dist(l, next) / dt;
            if (expo < -45.0) continue;  // acceptance probability below 3e-20
            if (rng.uniform_open01() < std::exp(expo)) {
                // place the exit at the step midpoint projected onto the line
                exit = place_on_line(l, 0.5 * (pos + next));
                crossed = true;
            }
        }
        if (crossed) return {exit, domain, ExitMethod::Euler, dt, k};
        pos = next;
    }
    throw MaxStepsError(max_steps);
}

std::pair<int, double> strip_exit_components(const ExitSample& s) {
    if (s.domain.kind != DomainKind::Strip)
        throw MapDomainError("strip_exit_components: sample is not a strip exit");
    const int side = s.exit_point.real() > 0.0 ? +1 : -1;
    return {side, s.exit_point.imag()};
}

}  // namespace cauchylab
