#include "itnlab/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace itnlab {

namespace {

constexpr std::int8_t kDown = 0; // value -1
constexpr std::int8_t kUp = 1;   // value +1

LatticePath make_two_state(long steps) {
    LatticePath p;
    p.values = {-1.0, +1.0};
    p.states.reserve(static_cast<std::size_t>(steps) + 1);
    p.x.reserve(static_cast<std::size_t>(steps) + 1);
    return p;
}

} // namespace

void WalkParams::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("WalkParams: alpha, beta must lie in [0,1]");
    if (y0 != -1 && y0 != 1)
        throw std::invalid_argument("WalkParams: y0 must be -1 or +1");
}

LatticePath simulate_order1(const WalkParams& params, long steps, RngStream& rng) {
    params.validate();
    if (steps < 0) throw std::invalid_argument("simulate_order1: steps must be >= 0");
    LatticePath p = make_two_state(steps);
    std::int8_t cur = params.y0 < 0 ? kDown : kUp;
    double sum = params.y0;
    p.states.push_back(cur);
    p.x.push_back(sum);
    for (long t = 1; t <= steps; ++t) {
        const double flip = (cur == kDown) ? params.alpha : params.beta;
        if (rng.next_double() < flip) cur = static_cast<std::int8_t>(1 - cur);
        sum += p.values[static_cast<std::size_t>(cur)];
        p.states.push_back(cur);
        p.x.push_back(sum);
    }
    return p;
}

LatticePath simulate_order1_skipahead(const WalkParams& params, long steps,
                                      RngStream& rng) {
    params.validate();
    if (!(params.alpha > 0.0 && params.alpha < 1.0) ||
        !(params.beta > 0.0 && params.beta < 1.0))
        throw std::invalid_argument(
            "simulate_order1_skipahead: alpha, beta must lie strictly in (0,1)");
    if (steps < 0) throw std::invalid_argument("simulate_order1_skipahead: steps >= 0");

    LatticePath p = make_two_state(steps);
    std::int8_t cur = params.y0 < 0 ? kDown : kUp;
    double sum = params.y0;
    p.states.push_back(cur);
    p.x.push_back(sum);
    long t = 0;
    while (t < steps) {
        // Run length before the next sign change is geometric in the
        // current state's flip probability.
        const double flip = (cur == kDown) ? params.alpha : params.beta;
        long long run = rng.geometric(flip);
        // Stay on the current sign for run-1 more steps, then flip once.
        const double v = p.values[static_cast<std::size_t>(cur)];
        while (run > 1 && t < steps) {
            sum += v;
            p.states.push_back(cur);
            p.x.push_back(sum);
            ++t;
            --run;
        }
        if (t >= steps) break;
        cur = static_cast<std::int8_t>(1 - cur);
        sum += p.values[static_cast<std::size_t>(cur)];
        p.states.push_back(cur);
        p.x.push_back(sum);
        ++t;
    }
    return p;
}

std::vector<SignChange> sign_change_times(const LatticePath& path) {
    if (path.values.size() != 2)
        throw std::invalid_argument("sign_change_times: two-state path required");
    std::vector<SignChange> out;
    long long prev_t = 0;
    for (std::size_t t = 1; t < path.states.size(); ++t) {
        if (path.states[t] != path.states[t - 1]) {
            const auto tt = static_cast<long long>(t);
            out.push_back({tt, tt - prev_t});
            prev_t = tt;
        }
    }
    return out;
}

std::vector<double> reconstruct_from_sign_changes(const std::vector<SignChange>& changes,
                                                  int y0, long steps) {
    // X_t = -y0 * [ sum_{j<=k} (-1)^j A_j + (-1)^{k+1} (t - T_k + 1) ], k = N_t.
    std::vector<double> x(static_cast<std::size_t>(steps) + 1);
    std::size_t k = 0;
    double alt = 0.0; // sum_{j<=k} (-1)^j A_j
    long long tk = 0;
    for (long t = 0; t <= steps; ++t) {
        while (k < changes.size() && changes[k].time <= t) {
            const double sign = (k % 2 == 0) ? -1.0 : +1.0; // (-1)^{k+1} for j=k+1
            alt += sign * static_cast<double>(changes[k].length);
            tk = changes[k].time;
            ++k;
        }
        const double tail_sign = (k % 2 == 0) ? -1.0 : +1.0; // (-1)^{k+1}
        x[static_cast<std::size_t>(t)] =
            -y0 * (alt + tail_sign * static_cast<double>(t - tk + 1));
    }
    return x;
}

double KStateParams::row_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < k(); ++j) s += rate(i, j);
    return s;
}

void KStateParams::validate() const {
    const int n = k();
    if (n < 2) throw std::invalid_argument("KStateParams: need at least 2 states");
    if (rates.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("KStateParams: rate matrix must be k x k");
    if (!(delta_t > 0.0)) throw std::invalid_argument("KStateParams: delta_t must be > 0");
    for (int i = 0; i < n; ++i) {
        if (rate(i, i) != 0.0)
            throw std::invalid_argument("KStateParams: diagonal rates must be 0");
        for (int j = 0; j < n; ++j) {
            if (rate(i, j) < 0.0)
                throw std::invalid_argument("KStateParams: rates must be >= 0");
            if (rate(i, j) * delta_t > 1.0)
                throw std::invalid_argument("KStateParams: c(i,j)*delta_t must be <= 1");
        }
        const double rs = row_sum(i);
        if (!(rs > 0.0))
            throw std::invalid_argument("KStateParams: every row sum must be > 0");
        if (!(rs * delta_t < 1.0))
            throw std::invalid_argument("KStateParams: row_sum*delta_t must be < 1");
    }
}

LatticePath simulate_kstate(const KStateParams& params, long steps, int start_index,
                            RngStream& rng) {
    params.validate();
    if (steps < 0) throw std::invalid_argument("simulate_kstate: steps must be >= 0");
    const int n = params.k();
    if (start_index < 0 || start_index >= n)
        throw std::invalid_argument("simulate_kstate: start_index out of range");

    LatticePath p;
    p.values = params.values;
    p.states.reserve(static_cast<std::size_t>(steps) + 1);
    p.x.reserve(static_cast<std::size_t>(steps) + 1);
    int cur = start_index;
    double sum = p.values[static_cast<std::size_t>(cur)];
    p.states.push_back(static_cast<std::int8_t>(cur));
    p.x.push_back(sum);
    for (long t = 1; t <= steps; ++t) {
        double u = rng.next_double();
        int next = cur;
        for (int j = 0; j < n; ++j) {
            if (j == cur) continue;
            const double pj = params.rate(cur, j) * params.delta_t;
            if (u < pj) {
                next = j;
                break;
            }
            u -= pj;
        }
        cur = next;
        sum += p.values[static_cast<std::size_t>(cur)];
        p.states.push_back(static_cast<std::int8_t>(cur));
        p.x.push_back(sum);
    }
    return p;
}

void Order2Params::validate() const {
    if (!(c0 > 0.0) || !(c1 > 0.0))
        throw std::invalid_argument("Order2Params: c0, c1 must be > 0");
    if (!(delta_t > 0.0)) throw std::invalid_argument("Order2Params: delta_t must be > 0");
    if (!(c0 * delta_t < 1.0) || !(c1 * delta_t < 1.0))
        throw std::invalid_argument("Order2Params: c_i*delta_t must be < 1");
    if (!(p0 > 0.0 && p0 <= 1.0) || !(p1 > 0.0 && p1 <= 1.0))
        throw std::invalid_argument("Order2Params: p0, p1 must lie in (0,1]");
}

LatticePath simulate_order2(const Order2Params& params, long steps, int y0, int y1,
                            RngStream& rng) {
    params.validate();
    if ((y0 != -1 && y0 != 1) || (y1 != -1 && y1 != 1))
        throw std::invalid_argument("simulate_order2: start signs must be -1 or +1");
    if (steps < 0) throw std::invalid_argument("simulate_order2: steps must be >= 0");

    LatticePath p = make_two_state(steps);
    std::int8_t cur = y0 < 0 ? kDown : kUp;
    double sum = y0;
    p.states.push_back(cur);
    p.x.push_back(sum);
    if (steps == 0) return p;

    std::int8_t nxt = y1 < 0 ? kDown : kUp;
    sum += p.values[static_cast<std::size_t>(nxt)];
    p.states.push_back(nxt);
    p.x.push_back(sum);

    for (long t = 2; t <= steps; ++t) {
        const double u = rng.next_double();
        std::int8_t after;
        if (cur == kDown && nxt == kDown)
            after = (u < params.c0 * params.delta_t) ? kUp : kDown;
        else if (cur == kDown && nxt == kUp)
            after = (u < params.p0) ? kUp : kDown;
        else if (cur == kUp && nxt == kDown)
            after = (u < params.p1) ? kDown : kUp;
        else
            after = (u < params.c1 * params.delta_t) ? kDown : kUp;
        cur = nxt;
        nxt = after;
        sum += p.values[static_cast<std::size_t>(nxt)];
        p.states.push_back(nxt);
        p.x.push_back(sum);
    }
    return p;
}

double RescaledPath::eval(double s) const {
    if (s < 0.0 || s > horizon() * (1.0 + 1e-12))
        throw std::out_of_range("RescaledPath::eval: s beyond horizon");
    const double pos = s / dt;
    auto k = static_cast<std::size_t>(pos);
    if (k >= base.steps()) k = base.steps() - (base.steps() > 0 ? 1 : 0);
    const double frac = pos - static_cast<double>(k);
    if (k + 1 >= base.x.size()) return dx * base.x[k];
    return dx * (base.x[k] + frac * (base.x[k + 1] - base.x[k]));
}

} // namespace itnlab
