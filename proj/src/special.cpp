#include "itnlab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace itnlab {

namespace {

constexpr double kSeriesCut = 30.0;

// Power series I_nu(x) = sum_m (x/2)^{nu+2m} / (m! (m+nu)!), nu in {0,1}.
double bessel_series(int nu, double x) {
    const double q = 0.25 * x * x;
    double term = (nu == 0) ? 1.0 : 0.5 * x;
    double sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= q / (static_cast<double>(m) * static_cast<double>(m + nu));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Asymptotic expansion I_nu(x) ~ e^x/sqrt(2 pi x) * sum_k a_k(nu)/x^k,
// summed until terms stop decreasing.
double bessel_asymptotic(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k <= 30; ++k) {
        const double tk = 2.0 * k - 1.0;
        term *= -(mu - tk * tk) / (8.0 * k * x);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x) * sum;
}

} // namespace

double bessel_i0(double x) {
    if (x < 0.0) throw std::invalid_argument("bessel_i0: x must be >= 0");
    return (x <= kSeriesCut) ? bessel_series(0, x) : bessel_asymptotic(0, x);
}

double bessel_i1(double x) {
    if (x < 0.0) throw std::invalid_argument("bessel_i1: x must be >= 0");
    return (x <= kSeriesCut) ? bessel_series(1, x) : bessel_asymptotic(1, x);
}

double bessel_i1_over_x(double x) {
    if (x < 0.0) throw std::invalid_argument("bessel_i1_over_x: x must be >= 0");
    if (x > 1e-4) return bessel_i1(x) / x;
    // I1(x)/x = 1/2 + x^2/16 + x^4/384 + ...
    const double q = x * x;
    return 0.5 + q / 16.0 + q * q / 384.0;
}

QuadratureRule QuadratureRule::gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
        double z1 = 2.0;
        double pp = 0.0;
        while (std::abs(z - z1) > 1e-15) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[order - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[order - i] = rule.weights[i - 1];
    }
    return rule;
}

double QuadratureRule::apply(const std::function<double(double)>& f, double a,
                             double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        sum += weights[i] * f(mid + half * nodes[i]);
    return sum * half;
}

namespace {

struct Panel {
    double a, b;
    double coarse;  // one-panel estimate
    double refined; // two-half estimate
    double err;
};

Panel make_panel(const QuadratureRule& rule, const std::function<double(double)>& f,
                 double a, double b) {
    Panel p;
    p.a = a;
    p.b = b;
    p.coarse = rule.apply(f, a, b);
    const double mid = 0.5 * (a + b);
    p.refined = rule.apply(f, a, mid) + rule.apply(f, mid, b);
    p.err = std::abs(p.refined - p.coarse);
    return p;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (a > b) throw std::invalid_argument("integrate: a must be <= b");
    if (a == b) return 0.0;
    static const QuadratureRule rule = QuadratureRule::gauss_legendre(15);

    constexpr int kMaxPanels = 60;
    std::vector<Panel> panels;
    panels.reserve(kMaxPanels);
    panels.push_back(make_panel(rule, f, a, b));

    for (;;) {
        double total = 0.0, err = 0.0;
        for (const Panel& p : panels) {
            total += p.refined;
            err += p.err;
        }
        if (err <= tol * (1.0 + std::abs(total))) return total;
        if (static_cast<int>(panels.size()) >= kMaxPanels)
            throw std::runtime_error("integrate: no convergence within panel budget");
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        const Panel old = panels[worst];
        const double mid = 0.5 * (old.a + old.b);
        panels[worst] = make_panel(rule, f, old.a, mid);
        panels.push_back(make_panel(rule, f, mid, old.b));
    }
}

} // namespace itnlab
