#ifndef ITNLAB_LAWS_HPP
#define ITNLAB_LAWS_HPP

#include "itnlab/itn.hpp"

namespace itnlab {

// Derived rate constants: tau = (c0+c1)/2, tau_bar = (c1-c0)/2,
// c = c0+c1, c_bar = c1-c0.
struct RateDeriv {
    double tau;
    double tau_bar;
    double c;
    double c_bar;

    explicit RateDeriv(const ItnParams& p)
        : tau(0.5 * (p.c0 + p.c1)),
          tau_bar(0.5 * (p.c1 - p.c0)),
          c(p.c0 + p.c1),
          c_bar(p.c1 - p.c0) {}
};

// E[X_t | X_0 = Y_0 = y0] for the order-1 walk. Requires alpha + beta > 0.
double expected_x(long t, double alpha, double beta, int y0);

// P(N_t = n). t = 0 returns the indicator of n = 0.
double prob_n(const ItnParams& params, double t, long n);

// Conditional density of Z_t given N_t = n (n >= 1) at z in [-t,t].
// The symmetric case uses the closed Beta form, no quadrature.
double cond_density(const ItnParams& params, double t, long n, double z);

// Smallest K with P(N_t > K) below the requested tail bound
// (Poisson domination at rate max(c0,c1)).
long truncation_n(const ItnParams& params, double t, double tail = 1e-12);

struct MarginalDensity {
    double atom;    // weight of the atom at x = t
    double density; // pdf value on (-t, t), zero outside
};

// Law of Z_t: atom e^{-c0 t} at t plus a Bessel density on (-t,t).
MarginalDensity marginal_density(const ItnParams& params, double t, double x);

struct ParityProbs {
    double even;
    double odd;
};

ParityProbs parity_probs(const ItnParams& params, double t);

// E[Z_t] = (tau_bar/tau) t + c0 (1 - e^{-2 tau t}) / (2 tau^2).
double mean_z(const ItnParams& params, double t);

struct LaplaceParts {
    double even; // E[e^{-mu Z_t}; N_t even]
    double odd;  // E[e^{-mu Z_t}; N_t odd]
};

LaplaceParts laplace_parts(const ItnParams& params, double t, double mu);

// E[e^{-mu Z_t}], any real mu.
double laplace_full(const ItnParams& params, double t, double mu);

// Laplace transform in time of laplace_full: (s + 2 tau - mu)/((s+tau)^2 - E).
// Requires s on the convergent side, (s+tau)^2 > E.
double time_laplace_F(const ItnParams& params, double mu, double s);

// Roots and prefactors of the moment generating function
// Phi(lambda, t) = E[lambda^{X_t}] = a+ theta+^t + a- theta-^t.
struct MgfEval {
    double theta_plus;
    double theta_minus;
    double a_plus;
    double a_minus;
    double discriminant;
};

// Requires lambda > 0 and alpha, beta strictly inside (0,1).
MgfEval mgf_eval(double lambda, double alpha, double beta, int y0);

double mgf_phi(double lambda, long t, double alpha, double beta, int y0);

// Limit-regime inputs: base probabilities (alpha0, beta0), rate perturbations
// (c0, c1) entering as alpha = alpha0 + c0 dx, and the rescaling rate r.
struct AsymParams {
    double alpha0 = 0.0;
    double beta0 = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double r = 1.0;

    double rho0() const { return 1.0 - alpha0 - beta0; } // asymmetry coefficient
    double eta0() const { return beta0 - alpha0; }
    void validate() const;
};

// Deterministic drift per unit time in the r*dt = dx regime: -r eta0/(1-rho0).
double lln_drift(const AsymParams& ap);

struct CltParams {
    double m;      // drift per unit time of the shifted process
    double sigma2; // variance per unit time
};

// Gaussian limit parameters in the r*dt = dx^2 regime.
CltParams clt_params(const AsymParams& ap);

// Variance per unit time of the cubic regime limit (alpha0 = beta0 = 1,
// c0 = c1 < 0, r*dt = dx^3): -r*c0.
double cubic_variance(double r, double c0);

struct Order2Effective {
    double v0;
    double v1;
    double c0_eff;
    double c1_eff;
};

// v_i = p_i / (1 - (1-p0)(1-p1)), c_i' = c_i v_i.
Order2Effective order2_effective(double c0, double c1, double p0, double p1);

} // namespace itnlab

#endif
