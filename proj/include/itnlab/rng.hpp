#ifndef ITNLAB_RNG_HPP
#define ITNLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace itnlab {

// Identifies one reproducible sample sequence. Ensembles assign
// stream = path index so results do not depend on scheduling order.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// Counter-style SplitMix64 generator: the state advances by a fixed odd
// increment derived from (seed, stream), so every stream has full period
// 2^64 and can be positioned at draw n in O(1) via jump().
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
        gamma_ = mix(stream ^ mix(seed + 0x5851f42d4c957f2dULL)) | 1ULL;
    }
    explicit RngStream(const RngSpec& spec) : RngStream(spec.seed, spec.stream) {}

    std::uint64_t next_u64() {
        state_ += gamma_;
        return mix(state_);
    }

    // Uniform on the open interval (0,1); safe to pass through log().
    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential by inversion, parameterized by its mean.
    double exponential(double mean) { return -mean * std::log(next_double()); }

    // Geometric on {1,2,...} with success probability p, by inversion:
    // ceil(log U / log(1-p)). Requires 0 < p < 1.
    std::int64_t geometric(double p) {
        if (!(p > 0.0 && p < 1.0))
            throw std::invalid_argument("geometric: p must lie strictly in (0,1)");
        const double a = std::log(next_double()) / std::log1p(-p);
        const auto k = static_cast<std::int64_t>(std::ceil(a));
        return k < 1 ? 1 : k;
    }

    // True with probability p.
    bool bernoulli(double p) { return next_double() < p; }

    void jump(std::uint64_t n) { state_ += gamma_ * n; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
    std::uint64_t gamma_;
};

} // namespace itnlab

#endif
