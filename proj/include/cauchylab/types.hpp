#ifndef CAUCHYLAB_TYPES_HPP
#define CAUCHYLAB_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cauchylab {

using Complex = std::complex<double>;

// Thrown when parameters or configuration violate a documented precondition.
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a complex evaluation lands on (or within tolerance of) a pole,
// or a real map is evaluated at a singularity.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an input lies outside a map's domain (off the unit circle,
// outside the strip, sample from the wrong domain kind, ...).
struct MapDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Euler walk failed to exit within the step budget.
struct MaxStepsError : std::runtime_error {
    std::uint64_t steps;
    explicit MaxStepsError(std::uint64_t n)
        : std::runtime_error("path did not exit within " + std::to_string(n) + " steps"),
          steps(n) {}
};

// An orbit guard fired before the requested length was reached.
struct EarlyTermination : std::runtime_error {
    std::size_t step;
    explicit EarlyTermination(std::size_t s)
        : std::runtime_error("orbit terminated early at step " + std::to_string(s)),
          step(s) {}
};

// A point of the extended real line R u {inf}. There is a single point at
// infinity (the real projective line), so poles of the maps in this library
// compose without ever producing IEEE NaN/Inf payloads downstream.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;

    // Finite doubles carry their value; +-inf collapse to the point at
    // infinity; NaN is rejected because it encodes no point of R u {inf}.
    ExtendedReal(double v) {  // NOLINT(google-explicit-constructor)
        if (std::isnan(v)) throw InvalidParams("NaN is not a point of the extended real line");
        if (std::isinf(v)) {
            inf_ = true;
            v_ = 0.0;
        } else {
            v_ = v;
        }
    }

    static constexpr ExtendedReal infinity() {
        ExtendedReal x;
        x.inf_ = true;
        return x;
    }

    constexpr bool is_infinite() const { return inf_; }

    // Finite value; calling this on the point at infinity is a logic error.
    double value() const {
        if (inf_) throw std::logic_error("value() called on the point at infinity");
        return v_;
    }

    friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }

private:
    double v_ = 0.0;
    bool inf_ = false;
};

}  // namespace cauchylab

#endif
