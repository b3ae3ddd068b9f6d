#ifndef ITNLAB_WALK_HPP
#define ITNLAB_WALK_HPP

#include <cstdint>
#include <vector>

#include "itnlab/rng.hpp"

namespace itnlab {

// Transition probabilities of the two-state increment chain:
// alpha = P(next=+1 | cur=-1), beta = P(next=-1 | cur=+1).
// Boundary values 0 and 1 are legal; the Delta-parameterized regimes reach them.
struct WalkParams {
    double alpha = 0.0;
    double beta = 0.0;
    int y0 = -1; // initial increment, -1 or +1

    void validate() const;
};

// A simulated lattice path: 8-bit state indices into a small value set,
// plus the running partial sums x[t] = sum_{i<=t} values[states[i]].
// Note x[0] = y[0]: the walk has t+1 summands at time t.
struct LatticePath {
    std::vector<std::int8_t> states;
    std::vector<double> values;
    std::vector<double> x;

    double y(std::size_t t) const { return values[static_cast<std::size_t>(states[t])]; }
    std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
};

// Step-by-step simulation of the order-1 walk; exact for any alpha, beta in [0,1].
LatticePath simulate_order1(const WalkParams& params, long steps, RngStream& rng);

// Same law, implemented by sampling geometric run lengths between sign
// changes. Requires 0 < alpha < 1 and 0 < beta < 1 so holding times are proper.
LatticePath simulate_order1_skipahead(const WalkParams& params, long steps,
                                      RngStream& rng);

struct SignChange {
    long long time;   // T_k, index of the k-th sign change
    long long length; // A_k = T_k - T_{k-1}
};

// Sign-change times of a two-state path.
std::vector<SignChange> sign_change_times(const LatticePath& path);

// Rebuild x[t] from the sign-change sequence alone; equals the summed path exactly.
std::vector<double> reconstruct_from_sign_changes(const std::vector<SignChange>& changes,
                                                  int y0, long steps);

// k-state increment chain: off-diagonal transition probability c(i,j)*delta_t,
// diagonal 1 - sum_l c(i,l)*delta_t.
struct KStateParams {
    std::vector<double> values; // y_1..y_k
    std::vector<double> rates;  // row-major k x k, zero diagonal
    double delta_t = 0.0;

    int k() const { return static_cast<int>(values.size()); }
    double rate(int i, int j) const { return rates[static_cast<std::size_t>(i) * values.size() + j]; }
    double row_sum(int i) const;
    void validate() const;
};

LatticePath simulate_kstate(const KStateParams& params, long steps, int start_index,
                            RngStream& rng);

// Order-2 chain on {-1,1}: the pair (y_t, y_{t+1}) is Markov on the four
// states {(-1,-1),(-1,1),(1,-1),(1,1)} with rows
//   (-1,-1): 1-c0*dt, c0*dt, 0, 0
//   (-1, 1): 0, 0, 1-p0, p0
//   ( 1,-1): p1, 1-p1, 0, 0
//   ( 1, 1): 0, 0, c1*dt, 1-c1*dt
struct Order2Params {
    double c0 = 0.0, c1 = 0.0;
    double p0 = 0.0, p1 = 0.0;
    double delta_t = 0.0;

    void validate() const;
};

LatticePath simulate_order2(const Order2Params& params, long steps, int y0, int y1,
                            RngStream& rng);

// Space-time rescaled path Z(s) = dx * x(s/dt), linearly interpolated
// between lattice times; Lipschitz with constant dx/dt.
struct RescaledPath {
    LatticePath base;
    double dx = 0.0;
    double dt = 0.0;

    double horizon() const { return static_cast<double>(base.steps()) * dt; }
    double eval(double s) const;
};

} // namespace itnlab

#endif
