#include "itnlab/itn.hpp"

#include <algorithm>
#include <stdexcept>

namespace itnlab {

void ItnParams::validate() const {
    if (!(c0 > 0.0) || !(c1 > 0.0))
        throw std::invalid_argument("ItnParams: c0, c1 must be > 0");
}

ItnPath sample_jumps(const ItnParams& params, double horizon, RngStream& rng) {
    params.validate();
    if (!(horizon > 0.0))
        throw std::invalid_argument("sample_jumps: horizon must be > 0");
    ItnPath path;
    path.horizon = horizon;
    double t = 0.0;
    bool even_phase = true; // N even: next inter-arrival has mean 1/c0
    for (;;) {
        t += rng.exponential(even_phase ? 1.0 / params.c0 : 1.0 / params.c1);
        if (t > horizon) break;
        path.jump_times.push_back(t);
        even_phase = !even_phase;
    }
    return path;
}

ItnState eval_z(const ItnPath& path, double t) {
    if (t < 0.0 || t > path.horizon * (1.0 + 1e-12))
        throw std::out_of_range("eval_z: t beyond horizon");
    ItnState s;
    double prev = 0.0;
    double sign = +1.0;
    for (double u : path.jump_times) {
        if (u > t) break;
        s.z += sign * (u - prev);
        prev = u;
        sign = -sign;
        ++s.n;
    }
    s.z += sign * (t - prev);
    return s;
}

ItnState sample_state(const ItnParams& params, double t, RngStream& rng) {
    params.validate();
    ItnState s;
    double prev = 0.0;
    double clock = 0.0;
    double sign = +1.0;
    bool even_phase = true;
    for (;;) {
        clock += rng.exponential(even_phase ? 1.0 / params.c0 : 1.0 / params.c1);
        if (clock > t) break;
        s.z += sign * (clock - prev);
        prev = clock;
        sign = -sign;
        ++s.n;
        even_phase = !even_phase;
    }
    s.z += sign * (t - prev);
    return s;
}

ItnState ItnContinuation::eval(double t) const {
    ItnState inc = eval_z(path, t);
    ItnState out;
    out.z = base.z + slope * inc.z;
    out.n = base.n + inc.n;
    return out;
}

ItnContinuation markov_restart(const ItnState& state, const ItnParams& params,
                               double horizon, RngStream& rng) {
    params.validate();
    ItnContinuation cont;
    cont.base = state;
    if (state.n % 2 == 0) {
        cont.slope = +1;
        cont.path = sample_jumps(params, horizon, rng);
    } else {
        cont.slope = -1;
        cont.path = sample_jumps(params.swapped(), horizon, rng);
    }
    return cont;
}

double sample_randomized_symmetric(double c, double p, double t, RngStream& rng) {
    if (!(c > 0.0)) throw std::invalid_argument("sample_randomized_symmetric: c > 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("sample_randomized_symmetric: p in [0,1]");
    if (!(t > 0.0)) throw std::invalid_argument("sample_randomized_symmetric: t > 0");
    const double eps = rng.bernoulli(p) ? +1.0 : -1.0;
    const ItnState s = sample_state({c, c}, t, rng);
    return eps * s.z / t;
}

} // namespace itnlab
