#ifndef ITNLAB_LIMITS_LAB_HPP
#define ITNLAB_LIMITS_LAB_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "itnlab/laws.hpp"
#include "itnlab/walk.hpp"

namespace itnlab {

// One empirical-vs-analytic check inside a regime run.
struct TestOutcome {
    std::string name;
    double t = 0.0;         // associated time (or dx for ladder checks)
    double statistic = 0.0; // KS d or |z|
    double p_value = -1.0;  // -1 when the check is a z-score test
    double threshold = 0.0; // rejection threshold for p (or z limit)
    double observed = 0.0;
    double expected = 0.0;
    std::string reference;  // analytic reference the check is run against
    bool pass = false;
};

struct RegimeReport {
    std::string regime;
    std::uint64_t seed = 0;
    long n_paths = 0;
    std::string note; // reading choices that affect interpretation
    std::vector<std::pair<std::string, double>> config;
    std::vector<TestOutcome> tests;

    bool pass() const;
};

std::string regime_report_to_json(const RegimeReport& report);

// Walk parameters of the Delta-parameterized chain: alpha = alpha0 + c0 dx,
// beta = beta0 + c1 dx; throws if either leaves [0,1].
WalkParams build_pi_delta(const AsymParams& ap, double dx, int y0 = -1);

// Delta_x = Delta_t regime: rescaled walk marginals against exact ITN
// samples (two-sample KS, Bonferroni over the grid) plus moment z-scores.
RegimeReport run_itn_regime(double c0, double c1, double dx,
                            std::span<const double> t_grid, long n_paths,
                            std::uint64_t seed, int y0 = -1);

// r dt = dx regime over a dx ladder (largest to smallest): means against
// the deterministic drift at the smallest dx, variances decreasing in dx.
RegimeReport run_lln_regime(const AsymParams& ap, std::span<const double> dx_ladder,
                            std::span<const double> t_grid, long n_paths,
                            std::uint64_t seed);

// r dt = dx^2 regime: shifted process against the Gaussian limit law.
// Degenerate configurations (sigma^2 = 0) are checked mean-only with a
// variance-shrink test across {2 dx, dx}.
RegimeReport run_clt_regime(const AsymParams& ap, double dx,
                            std::span<const double> t_grid, long n_paths,
                            std::uint64_t seed);

// r dt = dx^3 regime with alpha0 = beta0 = 1 and c0 = c1 < 0.
RegimeReport run_cubic_regime(double c0, double r, double dx,
                              std::span<const double> t_grid, long n_paths,
                              std::uint64_t seed);

// k-state chain vs the integral of the limiting continuous-time chain.
RegimeReport run_kstate_regime(const KStateParams& kp, int start_index,
                               std::span<const double> t_grid, long n_paths,
                               std::uint64_t seed);

// Order-2 chain vs ITN with the effective rates, start-pair mapped per the
// four cases (mixture starts use the v_i weights).
RegimeReport run_order2_regime(const Order2Params& op, int y0, int y1,
                               std::span<const double> t_grid, long n_paths,
                               std::uint64_t seed);

} // namespace itnlab

#endif
