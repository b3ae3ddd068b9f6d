#include "itnlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace itnlab {

SampleSummary summarize(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2)
        throw std::invalid_argument("summarize: need at least 2 samples");
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : samples) {
        const double d = v - mean;
        ss += d * d;
    }
    SampleSummary out;
    out.n = n;
    out.mean = mean;
    out.variance = ss / static_cast<double>(n - 1);
    out.se = std::sqrt(out.variance / static_cast<double>(n));
    return out;
}

double kolmogorov_q(double x) {
    if (x <= 0.0) return 1.0;
    if (x > 8.0) return 0.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += sign * term;
        if (term < 1e-18) break;
        sign = -sign;
    }
    const double q = 2.0 * sum;
    return std::clamp(q, 0.0, 1.0);
}

KsResult ks_one_sample(std::span<const double> samples,
                       const std::function<double(double)>& cdf) {
    const std::size_t n = samples.size();
    if (n < 10)
        throw std::invalid_argument("ks_one_sample: need at least 10 samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    for (double v : sorted)
        if (std::isnan(v)) throw std::invalid_argument("ks_one_sample: NaN sample");
    std::sort(sorted.begin(), sorted.end());
    const double dn = static_cast<double>(n);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted[i]);
        const double hi = (static_cast<double>(i) + 1.0) / dn - f;
        const double lo = f - static_cast<double>(i) / dn;
        d = std::max({d, hi, lo});
    }
    KsResult r;
    r.d = d;
    r.p_approx = kolmogorov_q(std::sqrt(dn) * d);
    return r;
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 10 || b.size() < 10)
        throw std::invalid_argument("ks_two_sample: need at least 10 samples each");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    for (double v : sa)
        if (std::isnan(v)) throw std::invalid_argument("ks_two_sample: NaN sample");
    for (double v : sb)
        if (std::isnan(v)) throw std::invalid_argument("ks_two_sample: NaN sample");
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size());
    const double nb = static_cast<double>(sb.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        const double xa = sa[i], xb = sb[j];
        const double x = std::min(xa, xb);
        if (xa <= x) {
            while (i < sa.size() && sa[i] == x) ++i;
        }
        if (xb <= x) {
            while (j < sb.size() && sb[j] == x) ++j;
        }
        const double fa = static_cast<double>(i) / na;
        const double fb = static_cast<double>(j) / nb;
        d = std::max(d, std::abs(fa - fb));
    }
    KsResult r;
    r.d = d;
    const double ne = na * nb / (na + nb);
    r.p_approx = kolmogorov_q(std::sqrt(ne) * d);
    return r;
}

namespace {

// Series representation of P(a,x), valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_cdf(double x, double mean, double sd) {
    return normal_cdf((x - mean) / sd);
}

ChiSquareResult chi_square_gof(std::span<const double> observed,
                               std::span<const double> expected,
                               int df_override) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0)
            throw std::invalid_argument("chi_square_gof: expected count <= 0");
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    ChiSquareResult r;
    r.stat = stat;
    r.df = df_override >= 1 ? df_override : static_cast<int>(observed.size()) - 1;
    r.p = chi_square_p(stat, r.df);
    return r;
}

double chi_square_p(double stat, int df) {
    return gamma_q(0.5 * df, 0.5 * stat);
}

} // namespace itnlab
