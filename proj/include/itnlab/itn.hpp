#ifndef ITNLAB_ITN_HPP
#define ITNLAB_ITN_HPP

#include <vector>

#include "itnlab/rng.hpp"

namespace itnlab {

// Alternating jump rates: inter-arrival k has mean 1/c0 when k is odd
// (the process starts in the even phase) and mean 1/c1 when k is even.
struct ItnParams {
    double c0 = 0.0;
    double c1 = 0.0;

    void validate() const;
    ItnParams swapped() const { return {c1, c0}; }
};

// Jump times of the counting process on (0, horizon].
struct ItnPath {
    std::vector<double> jump_times;
    double horizon = 0.0;
};

// State of (Z, N) at some elapsed time.
struct ItnState {
    double z = 0.0;
    long long n = 0;
};

// Draw the jump times up to the horizon.
ItnPath sample_jumps(const ItnParams& params, double horizon, RngStream& rng);

// Z_t = integral of (-1)^{N_u} du (slope starts at +1), N_t = #jumps <= t.
ItnState eval_z(const ItnPath& path, double t);

// One draw of (Z_t, N_t) without materializing the path.
ItnState sample_state(const ItnParams& params, double t, RngStream& rng);

// Markov continuation from (z, n): fresh rates (c0,c1) and slope +1 when
// n is even, swapped rates and slope -1 when n is odd.
struct ItnContinuation {
    ItnState base;
    int slope = +1; // initial slope of the continuation
    ItnPath path;   // jump times of the continuation, measured from the restart

    ItnState eval(double t) const;
};

ItnContinuation markov_restart(const ItnState& state, const ItnParams& params,
                               double horizon, RngStream& rng);

// Symmetric-rate draw of eps * Z_t / t with P(eps=+1) = p.
double sample_randomized_symmetric(double c, double p, double t, RngStream& rng);

} // namespace itnlab

#endif
