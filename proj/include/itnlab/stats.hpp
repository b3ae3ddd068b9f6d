#ifndef ITNLAB_STATS_HPP
#define ITNLAB_STATS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace itnlab {

struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double se = 0.0;       // standard error of the mean
};

// Moments with unbiased variance; requires n >= 2.
SampleSummary summarize(std::span<const double> samples);

struct KsResult {
    double d = 0.0;        // sup-distance statistic
    double p_approx = 0.0; // asymptotic p-value
};

// Kolmogorov asymptotic survival function Q(x) = 2 sum (-1)^{k-1} e^{-2k^2x^2}.
double kolmogorov_q(double x);

// One-sample KS against a monotone cdf. Input is copied and sorted;
// NaN samples are rejected. Requires n >= 10.
KsResult ks_one_sample(std::span<const double> samples,
                       const std::function<double(double)>& cdf);

// Two-sample KS with the usual effective sample size n*m/(n+m).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

// Regularized incomplete gamma functions P(a,x), Q(a,x) = 1 - P(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Standard normal cdf.
double normal_cdf(double x);
double normal_cdf(double x, double mean, double sd);

struct ChiSquareResult {
    double stat = 0.0;
    int df = 0;
    double p = 0.0; // upper tail
};

// Pearson goodness of fit: observed counts vs expected counts
// (same length, expected > 0); df defaults to bins-1.
ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               int df_override = -1);

double chi_square_p(double stat, int df);

} // namespace itnlab

#endif
