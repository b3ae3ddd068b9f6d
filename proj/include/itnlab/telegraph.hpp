#ifndef ITNLAB_TELEGRAPH_HPP
#define ITNLAB_TELEGRAPH_HPP

#include <cstdint>
#include <vector>

#include "itnlab/itn.hpp"

namespace itnlab {

// Initial profile f and wave speed a. Analytic kinds support the exact
// wave solution; tabulated data is for the finite-difference oracle only.
struct InitialData {
    enum class Kind { PlaneWave, Gaussian, Tabulated };

    Kind kind = Kind::PlaneWave;
    double a = 1.0;      // wave speed
    double k = 1.0;      // plane wave number, f(x) = cos(k x)
    double center = 0.0; // gaussian parameters, f(x) = exp(-(x-center)^2/(2 width^2))
    double width = 1.0;
    std::vector<double> grid;   // tabulated kind
    std::vector<double> values;

    static InitialData plane_wave(double k, double a);
    static InitialData gaussian(double center, double width, double a);
    static InitialData tabulated(std::vector<double> grid, std::vector<double> values,
                                 double a);

    double eval(double x) const;
    void validate() const;
};

// d'Alembert solution u(x,t) = (f(x+at) + f(x-at))/2 of the wave equation
// with u(.,0) = f and zero initial velocity. Analytic kinds only.
double dalembert_u(const InitialData& f, double x, double t);

struct McEstimate {
    double value = 0.0;
    double se = 0.0;
};

// Monte Carlo solution of the telegraph equation w_tt + 2c w_t = a^2 w_xx:
// the average of u(x, Z_t) over symmetric-rate ITN paths.
McEstimate mc_telegraph(const InitialData& f, double c, double x, double t,
                        long n_paths, std::uint64_t seed);

// Separated-variable factor for plane-wave data: w(x,t) = cos(kx) g(t) with
// g'' + 2c g' + a^2 k^2 g = 0, g(0) = 1, g'(0) = 0.
double plane_wave_oracle(double k, double a, double c, double t);

// Periodic explicit central-difference grid for the same equation.
struct FdGrid {
    double x_min = 0.0;
    double x_max = 1.0;
    int nx = 0;     // number of cells; spacing (x_max - x_min)/nx
    double dt = 0.0;
    int nt = 0;

    double dx() const { return (x_max - x_min) / nx; }
    double x_at(int i) const { return x_min + i * dx(); }
};

struct FdSolution {
    FdGrid grid;
    std::vector<double> data; // (nt+1) rows by nx columns

    double at(int n, int i) const { return data[static_cast<std::size_t>(n) * grid.nx + i]; }
};

// Throws when the CFL condition a dt / dx <= 1 fails.
FdSolution fd_telegraph(const InitialData& f, double c, const FdGrid& grid);

struct SplitEstimate {
    double w_even = 0.0;
    double w_odd = 0.0;
    double se_even = 0.0;
    double se_odd = 0.0;
};

// Even/odd split of the asymmetric-rate representation: averages of
// u(x, Z_t) restricted to even and odd jump counts.
SplitEstimate mc_telegraph_split(const InitialData& f, double c0, double c1,
                                 double x, double t, long n_paths,
                                 std::uint64_t seed);

} // namespace itnlab

#endif
