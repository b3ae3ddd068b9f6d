#include "itnlab/telegraph.hpp"

#include <cmath>
#include <stdexcept>

#include "itnlab/parallel.hpp"

namespace itnlab {

InitialData InitialData::plane_wave(double k, double a) {
    InitialData f;
    f.kind = Kind::PlaneWave;
    f.k = k;
    f.a = a;
    f.validate();
    return f;
}

InitialData InitialData::gaussian(double center, double width, double a) {
    InitialData f;
    f.kind = Kind::Gaussian;
    f.center = center;
    f.width = width;
    f.a = a;
    f.validate();
    return f;
}

InitialData InitialData::tabulated(std::vector<double> grid, std::vector<double> values,
                                   double a) {
    InitialData f;
    f.kind = Kind::Tabulated;
    f.grid = std::move(grid);
    f.values = std::move(values);
    f.a = a;
    f.validate();
    return f;
}

void InitialData::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("InitialData: wave speed must be > 0");
    if (kind == Kind::Gaussian && !(width > 0.0))
        throw std::invalid_argument("InitialData: gaussian width must be > 0");
    if (kind == Kind::Tabulated &&
        (grid.size() != values.size() || grid.size() < 2))
        throw std::invalid_argument("InitialData: tabulated grid/value mismatch");
}

double InitialData::eval(double x) const {
    switch (kind) {
        case Kind::PlaneWave:
            return std::cos(k * x);
        case Kind::Gaussian: {
            const double u = (x - center) / width;
            return std::exp(-0.5 * u * u);
        }
        case Kind::Tabulated: {
            if (x <= grid.front()) return values.front();
            if (x >= grid.back()) return values.back();
            std::size_t lo = 0, hi = grid.size() - 1;
            while (hi - lo > 1) {
                const std::size_t mid = (lo + hi) / 2;
                (grid[mid] <= x ? lo : hi) = mid;
            }
            const double w = (x - grid[lo]) / (grid[lo + 1] - grid[lo]);
            return values[lo] + w * (values[lo + 1] - values[lo]);
        }
    }
    return 0.0;
}

double dalembert_u(const InitialData& f, double x, double t) {
    if (f.kind == InitialData::Kind::Tabulated)
        throw std::invalid_argument(
            "dalembert_u: tabulated data is reserved for the finite-difference path");
    return 0.5 * (f.eval(x + f.a * t) + f.eval(x - f.a * t));
}

McEstimate mc_telegraph(const InitialData& f, double c, double x, double t,
                        long n_paths, std::uint64_t seed) {
    if (!(c > 0.0)) throw std::invalid_argument("mc_telegraph: c must be > 0");
    if (t < 0.0) throw std::invalid_argument("mc_telegraph: t must be >= 0");
    if (n_paths < 2) throw std::invalid_argument("mc_telegraph: n_paths too small");
    std::vector<double> vals(n_paths);
    const ItnParams params{c, c};
    parallel_for(n_paths, [&](long p) {
        RngStream rng(seed, static_cast<std::uint64_t>(p));
        const double z = (t == 0.0) ? 0.0 : sample_state(params, t, rng).z;
        vals[static_cast<std::size_t>(p)] = dalembert_u(f, x, z);
    });
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(n_paths);
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    McEstimate out;
    out.value = mean;
    out.se = std::sqrt(ss / static_cast<double>(n_paths - 1) /
                       static_cast<double>(n_paths));
    return out;
}

double plane_wave_oracle(double k, double a, double c, double t) {
    if (!(c > 0.0)) throw std::invalid_argument("plane_wave_oracle: c must be > 0");
    const double omega2 = c * c - a * a * k * k;
    const double damp = std::exp(-c * t);
    const double eps = 1e-12 * c * c;
    if (omega2 > eps) {
        const double w = std::sqrt(omega2);
        return damp * (std::cosh(w * t) + c / w * std::sinh(w * t));
    }
    if (omega2 < -eps) {
        const double w = std::sqrt(-omega2);
        return damp * (std::cos(w * t) + c / w * std::sin(w * t));
    }
    return damp * (1.0 + c * t); // confluent branch
}

FdSolution fd_telegraph(const InitialData& f, double c, const FdGrid& grid) {
    if (!(c > 0.0)) throw std::invalid_argument("fd_telegraph: c must be > 0");
    if (grid.nx < 3 || grid.nt < 1 || !(grid.dt > 0.0) || !(grid.x_max > grid.x_min))
        throw std::invalid_argument("fd_telegraph: bad grid");
    const double dx = grid.dx();
    const double dt = grid.dt;
    const double cfl = f.a * dt / dx;
    if (cfl > 1.0 + 1e-12)
        throw std::invalid_argument("fd_telegraph: CFL violated, a dt/dx > 1");

    const int nx = grid.nx;
    FdSolution sol;
    sol.grid = grid;
    sol.data.resize(static_cast<std::size_t>(grid.nt + 1) * nx);

    auto row = [&](int n) { return sol.data.data() + static_cast<std::size_t>(n) * nx; };
    for (int i = 0; i < nx; ++i) row(0)[i] = f.eval(grid.x_at(i));

    const double lam2 = cfl * cfl; // (a dt/dx)^2
    auto dxx = [&](const double* w, int i) {
        const int im = (i == 0) ? nx - 1 : i - 1;
        const int ip = (i == nx - 1) ? 0 : i + 1;
        return w[ip] - 2.0 * w[i] + w[im];
    };

    // Second-order starter consistent with zero initial velocity:
    // w1 = w0 + dt^2/2 * a^2 w0_xx / (1 + c dt).
    for (int i = 0; i < nx; ++i)
        row(1)[i] = row(0)[i] + 0.5 * lam2 * dxx(row(0), i) / (1.0 + c * dt);

    const double denom = 1.0 + c * dt;
    const double w_prev = 1.0 - c * dt;
    for (int n = 2; n <= grid.nt; ++n) {
        const double* wm = row(n - 2);
        const double* w0 = row(n - 1);
        double* wp = row(n);
        for (int i = 0; i < nx; ++i)
            wp[i] = (lam2 * dxx(w0, i) + 2.0 * w0[i] - w_prev * wm[i]) / denom;
    }
    return sol;
}

SplitEstimate mc_telegraph_split(const InitialData& f, double c0, double c1,
                                 double x, double t, long n_paths,
                                 std::uint64_t seed) {
    const ItnParams params{c0, c1};
    params.validate();
    if (t < 0.0) throw std::invalid_argument("mc_telegraph_split: t must be >= 0");
    if (n_paths < 2)
        throw std::invalid_argument("mc_telegraph_split: n_paths too small");
    std::vector<double> even_vals(n_paths, 0.0), odd_vals(n_paths, 0.0);
    parallel_for(n_paths, [&](long p) {
        RngStream rng(seed, static_cast<std::uint64_t>(p));
        ItnState s;
        if (t > 0.0) s = sample_state(params, t, rng);
        const double u = dalembert_u(f, x, s.z);
        if (s.n % 2 == 0)
            even_vals[static_cast<std::size_t>(p)] = u;
        else
            odd_vals[static_cast<std::size_t>(p)] = u;
    });
    auto reduce = [&](const std::vector<double>& vals, double& mean, double& se) {
        mean = 0.0;
        for (double v : vals) mean += v;
        mean /= static_cast<double>(n_paths);
        double ss = 0.0;
        for (double v : vals) ss += (v - mean) * (v - mean);
        se = std::sqrt(ss / static_cast<double>(n_paths - 1) /
                       static_cast<double>(n_paths));
    };
    SplitEstimate out;
    reduce(even_vals, out.w_even, out.se_even);
    reduce(odd_vals, out.w_odd, out.se_odd);
    return out;
}

} // namespace itnlab
