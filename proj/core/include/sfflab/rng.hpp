// rng.hpp — deterministic counter-derived random streams
//
// Every ensemble realization draws from its own stream, derived purely from
// (base_seed, realization index). Results are therefore independent of worker
// count and evaluation order. Algorithms are pinned for bit-stable goldens:
//   * stream derivation: SplitMix64 (Steele/Lea/Flood mix), golden-ratio keyed
//   * generator: xoshiro256++ (Blackman & Vigna 2019)
//   * normal deviates: Box–Muller (trigonometric form), pair-cached

#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace sfflab {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on (0, 1]: 53-bit mantissa, shifted away from zero so that
    // log(u) in Box–Muller is always finite.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

// Stream for realization `index` under `base_seed`. The two inputs are mixed
// through independent SplitMix64 chains so that neighbouring indices and
// neighbouring seeds give uncorrelated streams.
inline Xoshiro256pp realization_stream(std::uint64_t base_seed, std::uint64_t index) {
    SplitMix64 a(base_seed);
    SplitMix64 b(index ^ 0x5851f42d4c957f2dULL);
    return Xoshiro256pp(a.next() ^ b.next());
}

// N(0, sigma^2) deviates; generates Box–Muller pairs and caches the second.
class GaussianStream {
public:
    explicit GaussianStream(Xoshiro256pp gen) : gen_(gen) {}

    double next(double sigma) {
        if (has_spare_) {
            has_spare_ = false;
            return spare_ * sigma;
        }
        const double u1 = gen_.uniform01();
        const double u2 = gen_.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta) * sigma;
    }

private:
    Xoshiro256pp gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace sfflab
