#ifndef CAUCHYLAB_STATS_HPP
#define CAUCHYLAB_STATS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cauchylab/types.hpp"

namespace cauchylab {

// Immutable sorted sample buffer. Construction sorts once; every query after
// that is read-only and safe to run concurrently.
class EmpiricalDistribution {
public:
    // Takes ownership, sorts ascending. Samples must be nonempty and finite.
    explicit EmpiricalDistribution(std::vector<double> samples);

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }

    // Fraction of samples <= x.
    double ecdf(double x) const;

    // Nearest-rank quantile: the ceil(level * n)-th order statistic.
    // Levels must lie strictly inside (0,1).
    double quantile(double level) const;
    std::vector<double> quantiles(const std::vector<double>& levels) const;

    // Empirical characteristic function (1/n) sum_j e^{i theta x_j}.
    Complex cf(double theta) const;

private:
    std::vector<double> sorted_;
};

// CDF of the standard Cauchy law: 1/2 + arctan(x)/pi.
double cauchy_cdf(double x);

// CDF of the hyperbolic secant law with density sech(pi y/2)/2:
// (2/pi) arctan(e^{pi y/2}).
double sech_cdf(double y);

// One-sample Kolmogorov-Smirnov statistic against a continuous CDF:
// sup_i max(|i/n - F(x_(i))|, |(i-1)/n - F(x_(i))|).
double ks_one_sample(const EmpiricalDistribution& e, const std::function<double(double)>& cdf);

// Two-sample KS statistic: sup over the merged support of |F1 - F2|.
double ks_two_sample(const EmpiricalDistribution& e1, const EmpiricalDistribution& e2);

// Asymptotic KS critical values at level alpha (default the 0.001 used by
// every statistical gate in this project): c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_critical_one_sample(std::size_t n, double alpha = 0.001);
double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha = 0.001);

// Pearson correlation coefficient; needs at least two points per series and
// nonzero variance in each.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace cauchylab

#endif
