#ifndef ITNLAB_SPECIAL_HPP
#define ITNLAB_SPECIAL_HPP

#include <functional>
#include <vector>

namespace itnlab {

// Modified Bessel functions of the first kind, orders 0 and 1,
// for x >= 0. Power series below x = 30, asymptotic expansion above;
// relative error stays below 1e-13 on [0, 100].
double bessel_i0(double x);
double bessel_i1(double x);

// I1(x)/x, finite at the origin (value 1/2). Entire in x^2, so it gives
// the density factor sqrt((t+x)/(t-x)) I1(xi) its removable limit at x=t.
double bessel_i1_over_x(double x);

// Gauss-Legendre nodes and weights on [-1,1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static QuadratureRule gauss_legendre(int order);

    // Apply the rule mapped onto [a,b].
    double apply(const std::function<double(double)>& f, double a, double b) const;
};

// Adaptive panel Gauss-Legendre: repeatedly bisects the panel with the
// largest two-half error estimate until |error| <= tol*(1+|result|).
// Throws std::runtime_error after 60 panels without convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

} // namespace itnlab

#endif
