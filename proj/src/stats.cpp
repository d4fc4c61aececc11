#include "cauchylab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cauchylab {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw InvalidParams("EmpiricalDistribution: empty sample");
    for (double x : sorted_)
        if (!std::isfinite(x)) throw InvalidParams("EmpiricalDistribution: non-finite sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::ecdf(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalDistribution::quantile(double level) const {
    if (!(level > 0.0 && level < 1.0))
        throw InvalidParams("quantile: level must lie in (0,1)");
    const auto n = sorted_.size();
    // nearest rank: smallest k with k/n >= level
    auto k = static_cast<std::size_t>(std::ceil(level * static_cast<double>(n)));
    if (k < 1) k = 1;
    if (k > n) k = n;
    return sorted_[k - 1];
}

std::vector<double> EmpiricalDistribution::quantiles(const std::vector<double>& levels) const {
    std::vector<double> out;
    out.reserve(levels.size());
    for (double p : levels) out.push_back(quantile(p));
    return out;
}

Complex EmpiricalDistribution::cf(double theta) const {
    double re = 0.0, im = 0.0;
    for (double x : sorted_) {
        re += std::cos(theta * x);
        im += std::sin(theta * x);
    }
    const auto n = static_cast<double>(sorted_.size());
    return {re / n, im / n};
}

double cauchy_cdf(double x) { return 0.5 + std::atan(x) / std::numbers::pi; }

double sech_cdf(double y) {
    // atan(e^{pi y/2}) saturates cleanly: exp overflow gives atan(inf) = pi/2.
    return 2.0 / std::numbers::pi * std::atan(std::exp(std::numbers::pi * y / 2.0));
}

double ks_one_sample(const EmpiricalDistribution& e, const std::function<double(double)>& cdf) {
    const auto& xs = e.sorted();
    const auto n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        const double hi = static_cast<double>(i + 1) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d = std::max({d, hi, lo});
    }
    return d;
}

double ks_two_sample(const EmpiricalDistribution& e1, const EmpiricalDistribution& e2) {
    const auto& a = e1.sorted();
    const auto& b = e2.sorted();
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double diff = 0.0, d = 0.0;
    while (i < a.size() && j < b.size()) {
        // advance over ties in lockstep so the difference is evaluated
        // only at points where both ECDFs have settled
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) {
            diff -= 1.0 / na;
            ++i;
        }
        while (j < b.size() && b[j] == x) {
            diff += 1.0 / nb;
            ++j;
        }
        d = std::max(d, std::abs(diff));
    }
    // once one sample is exhausted |diff| only shrinks back to 0
    return d;
}

double ks_critical_one_sample(std::size_t n, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    const double nn = static_cast<double>(n), mm = static_cast<double>(m);
    return c * std::sqrt((nn + mm) / (nn * mm));
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw InvalidParams("pearson_correlation: need two equal-length series of size >= 2");
    const auto n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0)
        throw InvalidParams("pearson_correlation: zero variance series");
    return sab / std::sqrt(saa * sbb);
}

}  // namespace cauchylab
