#include "itnlab/laws.hpp"

#include <cmath>
#include <stdexcept>

#include "itnlab/special.hpp"

namespace itnlab {

namespace {

// sinh(y)/y with the Taylor form near 0.
double sinhc(double y) {
    if (std::abs(y) < 1e-4) {
        const double q = y * y;
        return 1.0 + q / 6.0 + q * q / 120.0;
    }
    return std::sinh(y) / y;
}

// Unnormalized conditional shape (t-z)^pm (t+z)^pp e^{tau_bar z} together
// with the log-prefactor, evaluated as a single exponential so large k
// stays inside double range.
double weighted_shape(double t, double z, long pm, long pp, double tau_bar,
                      double log_prefactor) {
    double lg = log_prefactor + tau_bar * z;
    if (pm > 0) {
        const double d = t - z;
        if (d <= 0.0) return 0.0;
        lg += static_cast<double>(pm) * std::log(d);
    }
    if (pp > 0) {
        const double d = t + z;
        if (d <= 0.0) return 0.0;
        lg += static_cast<double>(pp) * std::log(d);
    }
    return std::exp(lg);
}

struct NIndex {
    long k;    // block index
    long pm;   // exponent of (t-z)
    long pp;   // exponent of (t+z)
    double lp; // log of the constant prefactor of P(N_t = n)
};

// Splits n into the even/odd closed forms of the conditional law and the
// probability prefactor: even n=2k carries (c0 c1)^k / (2^{2k} k! (k-1)!),
// odd n=2k+1 carries c0^{k+1} c1^k / (2^{2k+1} (k!)^2).
NIndex n_index(const ItnParams& params, long n) {
    NIndex ix{};
    if (n % 2 == 0) {
        ix.k = n / 2;
        ix.pm = ix.k - 1;
        ix.pp = ix.k;
        ix.lp = ix.k * std::log(params.c0 * params.c1) - 2.0 * ix.k * std::log(2.0) -
                std::lgamma(ix.k + 1.0) - std::lgamma(static_cast<double>(ix.k));
    } else {
        ix.k = (n - 1) / 2;
        ix.pm = ix.k;
        ix.pp = ix.k;
        ix.lp = (ix.k + 1.0) * std::log(params.c0) + ix.k * std::log(params.c1) -
                (2.0 * ix.k + 1.0) * std::log(2.0) - 2.0 * std::lgamma(ix.k + 1.0);
    }
    return ix;
}

// Integral of the weighted shape over [-t, t].
double shape_integral(const ItnParams& params, double t, const NIndex& ix,
                      double tol = 1e-12) {
    const double tau_bar = RateDeriv(params).tau_bar;
    return integrate(
        [&](double z) {
            return weighted_shape(t, z, ix.pm, ix.pp, tau_bar, ix.lp);
        },
        -t, t, tol);
}

} // namespace

double expected_x(long t, double alpha, double beta, int y0) {
    if (t < 0) throw std::invalid_argument("expected_x: t must be >= 0");
    if (y0 != -1 && y0 != 1) throw std::invalid_argument("expected_x: y0 in {-1,+1}");
    if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("expected_x: alpha, beta in [0,1]");
    if (!(alpha + beta > 0.0))
        throw std::invalid_argument("expected_x: alpha + beta must be > 0");
    const double rho = 1.0 - alpha - beta;
    const double drift = (alpha - beta) / (1.0 - rho) * static_cast<double>(t + 1);
    const double decay = 1.0 - std::pow(rho, static_cast<double>(t + 1));
    const double denom = (1.0 - rho) * (1.0 - rho);
    if (y0 == -1) return drift - 2.0 * alpha / denom * decay;
    return drift + 2.0 * beta / denom * decay;
}

double prob_n(const ItnParams& params, double t, long n) {
    params.validate();
    if (n < 0) throw std::invalid_argument("prob_n: n must be >= 0");
    if (t < 0.0) throw std::invalid_argument("prob_n: t must be >= 0");
    if (t == 0.0) return n == 0 ? 1.0 : 0.0;
    if (n == 0) return std::exp(-t * params.c0);
    const RateDeriv rd(params);
    const NIndex ix = n_index(params, n);
    return shape_integral(params, t, ix) * std::exp(-rd.tau * t);
}

double cond_density(const ItnParams& params, double t, long n, double z) {
    params.validate();
    if (n < 1)
        throw std::invalid_argument("cond_density: n >= 1 (n = 0 is the atom at t)");
    if (!(t > 0.0)) throw std::invalid_argument("cond_density: t must be > 0");
    if (std::abs(z) > t) return 0.0;

    if (params.c0 == params.c1) {
        // Centered beta form, chi_{2k+1} = chi_{2k+2} = (2k+1)!/(2^{2k+1}(k!)^2).
        const long k = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
        const long kk = (n % 2 == 0) ? k - 1 : k; // chi index base
        const double log_chi = std::lgamma(2.0 * kk + 2.0) -
                               (2.0 * kk + 1.0) * std::log(2.0) -
                               2.0 * std::lgamma(kk + 1.0);
        double lg = log_chi - static_cast<double>(n) * std::log(t);
        const long pm = (n % 2 == 0) ? k - 1 : k;
        const long pp = k;
        if (pm > 0) {
            if (t - z <= 0.0) return 0.0;
            lg += pm * std::log(t - z);
        }
        if (pp > 0) {
            if (t + z <= 0.0) return 0.0;
            lg += pp * std::log(t + z);
        }
        return std::exp(lg);
    }

    const NIndex ix = n_index(params, n);
    const double norm = shape_integral(params, t, ix);
    const double tau_bar = RateDeriv(params).tau_bar;
    return weighted_shape(t, z, ix.pm, ix.pp, tau_bar, ix.lp) / norm;
}

long truncation_n(const ItnParams& params, double t, double tail) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("truncation_n: t >= 0");
    const double lam = std::max(params.c0, params.c1) * t;
    // Walk the Poisson pmf until the remaining upper tail is certified small.
    double pmf = std::exp(-lam);
    double cdf = pmf;
    long k = 0;
    while (1.0 - cdf > tail && k < 100000) {
        ++k;
        pmf *= lam / static_cast<double>(k);
        cdf += pmf;
    }
    return k;
}

MarginalDensity marginal_density(const ItnParams& params, double t, double x) {
    params.validate();
    if (!(t > 0.0)) throw std::invalid_argument("marginal_density: t must be > 0");
    if (std::abs(x) > t) throw std::invalid_argument("marginal_density: |x| <= t required");
    const RateDeriv rd(params);
    MarginalDensity out;
    out.atom = std::exp(-params.c0 * t);
    const double arg2 = params.c0 * params.c1 * (t * t - x * x);
    const double xi = std::sqrt(std::max(arg2, 0.0));
    // sqrt(c0 c1 (t+x)/(t-x)) I1(xi) = c0 c1 (t+x) * I1(xi)/xi, finite at x = t.
    const double f = 0.5 *
                     (params.c0 * params.c1 * (t + x) * bessel_i1_over_x(xi) +
                      params.c0 * bessel_i0(xi)) *
                     std::exp(rd.tau_bar * x);
    out.density = f * std::exp(-rd.tau * t);
    return out;
}

ParityProbs parity_probs(const ItnParams& params, double t) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("parity_probs: t >= 0");
    const RateDeriv rd(params);
    const double damp = std::exp(-rd.tau * t);
    ParityProbs out;
    out.odd = params.c0 / rd.tau * std::sinh(rd.tau * t) * damp;
    out.even = (rd.tau_bar * std::sinh(rd.tau * t) + rd.tau * std::cosh(rd.tau * t)) /
               rd.tau * damp;
    return out;
}

double mean_z(const ItnParams& params, double t) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("mean_z: t >= 0");
    const RateDeriv rd(params);
    return rd.tau_bar / rd.tau * t -
           params.c0 / (2.0 * rd.tau * rd.tau) * std::expm1(-2.0 * rd.tau * t);
}

LaplaceParts laplace_parts(const ItnParams& params, double t, double mu) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("laplace_parts: t >= 0");
    const RateDeriv rd(params);
    const double e = mu * mu - 2.0 * rd.tau_bar * mu + rd.tau * rd.tau;
    const double sq = std::sqrt(e); // e = (mu - tau_bar)^2 + c0 c1 > 0
    const double damp = std::exp(-rd.tau * t);
    const double sh_over_sq = t * sinhc(t * sq); // sinh(t sq)/sq
    LaplaceParts out;
    out.even = ((-mu + rd.tau_bar) * sh_over_sq + std::cosh(t * sq)) * damp;
    out.odd = params.c0 * sh_over_sq * damp;
    return out;
}

double laplace_full(const ItnParams& params, double t, double mu) {
    params.validate();
    if (t < 0.0) throw std::invalid_argument("laplace_full: t >= 0");
    const RateDeriv rd(params);
    const double e = mu * mu - 2.0 * rd.tau_bar * mu + rd.tau * rd.tau;
    const double sq = std::sqrt(e);
    return ((-mu + rd.tau) * t * sinhc(t * sq) + std::cosh(t * sq)) *
           std::exp(-rd.tau * t);
}

double time_laplace_F(const ItnParams& params, double mu, double s) {
    params.validate();
    const RateDeriv rd(params);
    const double e = mu * mu - 2.0 * rd.tau_bar * mu + rd.tau * rd.tau;
    const double denom = (s + rd.tau) * (s + rd.tau) - e;
    if (!(denom > 0.0) || !(s + rd.tau > 0.0))
        throw std::domain_error("time_laplace_F: s below the abscissa of convergence");
    return (s + 2.0 * rd.tau - mu) / denom;
}

MgfEval mgf_eval(double lambda, double alpha, double beta, int y0) {
    if (!(lambda > 0.0)) throw std::invalid_argument("mgf_eval: lambda must be > 0");
    if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("mgf_eval: alpha, beta strictly in (0,1)");
    if (y0 != -1 && y0 != 1) throw std::invalid_argument("mgf_eval: y0 in {-1,+1}");
    const double rho = 1.0 - alpha - beta;
    const double s = (1.0 - alpha) / lambda + (1.0 - beta) * lambda;
    const double d = s * s - 4.0 * rho;
    const double sq = std::sqrt(d);
    MgfEval out;
    out.discriminant = d;
    out.theta_plus = 0.5 * (s + sq);
    // Vieta form avoids cancellation: theta+ theta- = rho.
    out.theta_minus = rho / out.theta_plus;
    if (y0 == -1) {
        out.a_plus =
            (1.0 - alpha + lambda * (lambda * alpha - out.theta_minus)) /
            (lambda * lambda * sq);
        out.a_minus = 1.0 / lambda - out.a_plus;
    } else {
        out.a_plus =
            ((1.0 - beta) * lambda * lambda + beta - lambda * out.theta_minus) / sq;
        out.a_minus = lambda - out.a_plus;
    }
    return out;
}

double mgf_phi(double lambda, long t, double alpha, double beta, int y0) {
    if (t < 0) throw std::invalid_argument("mgf_phi: t must be >= 0");
    const MgfEval e = mgf_eval(lambda, alpha, beta, y0);
    double pp = 1.0, pm = 1.0;
    for (long i = 0; i < t; ++i) {
        pp *= e.theta_plus;
        pm *= e.theta_minus;
    }
    return e.a_plus * pp + e.a_minus * pm;
}

void AsymParams::validate() const {
    if (!(alpha0 >= 0.0 && alpha0 <= 1.0 && beta0 >= 0.0 && beta0 <= 1.0))
        throw std::invalid_argument("AsymParams: alpha0, beta0 in [0,1]");
    if (!(r > 0.0)) throw std::invalid_argument("AsymParams: r must be > 0");
}

double lln_drift(const AsymParams& ap) {
    ap.validate();
    if (ap.rho0() == 1.0) throw std::invalid_argument("lln_drift: rho0 must differ from 1");
    return -ap.r * ap.eta0() / (1.0 - ap.rho0());
}

CltParams clt_params(const AsymParams& ap) {
    ap.validate();
    const double rho0 = ap.rho0();
    if (rho0 == 1.0) throw std::invalid_argument("clt_params: rho0 must differ from 1");
    const double eta0 = ap.eta0();
    const double tau = 0.5 * (ap.c0 + ap.c1);
    const double tau_bar = 0.5 * (ap.c1 - ap.c0);
    CltParams out;
    out.m = 2.0 * ap.r *
            (-tau_bar / (1.0 - rho0) + eta0 * tau / ((1.0 - rho0) * (1.0 - rho0)));
    out.sigma2 = ap.r * (1.0 + rho0) / (1.0 - rho0) *
                 (1.0 - eta0 * eta0 / ((1.0 - rho0) * (1.0 - rho0)));
    return out;
}

double cubic_variance(double r, double c0) {
    if (!(r > 0.0)) throw std::invalid_argument("cubic_variance: r must be > 0");
    if (!(c0 < 0.0)) throw std::invalid_argument("cubic_variance: c0 must be < 0");
    return -r * c0;
}

Order2Effective order2_effective(double c0, double c1, double p0, double p1) {
    if (!(p0 > 0.0 && p0 <= 1.0 && p1 > 0.0 && p1 <= 1.0))
        throw std::invalid_argument("order2_effective: p0, p1 in (0,1]");
    const double denom = 1.0 - (1.0 - p0) * (1.0 - p1);
    if (!(denom > 0.0))
        throw std::invalid_argument("order2_effective: p0 = p1 = 0 is degenerate");
    Order2Effective out;
    out.v0 = p0 / denom;
    out.v1 = p1 / denom;
    out.c0_eff = c0 * out.v0;
    out.c1_eff = c1 * out.v1;
    return out;
}

} // namespace itnlab
