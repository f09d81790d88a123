#pragma once

#include <cmath>
#include <cstdint>

namespace expfunc {

/// SplitMix64 finalizer, used both as a stand-alone mixer and to expand a
/// 64-bit seed into generator state.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Documented stream-splitting rule: the engine for (seed, stream, path) is
/// seeded from the SplitMix64 sequence started at
///     seed XOR (stream * 0x9e3779b97f4a7c15) XOR (path * 0xd1b54a32d192ed03).
/// Streams are role indices inside one simulation run (0 = primary path
/// randomness, 1 = independent second sample set, ...). The mapping depends
/// only on (seed, stream, path), never on thread scheduling.
inline uint64_t stream_seed(uint64_t seed, uint64_t stream, uint64_t path) {
    return seed ^ (stream * 0x9e3779b97f4a7c15ULL) ^ (path * 0xd1b54a32d192ed03ULL);
}

/// xoshiro256++ (Blackman/Vigna), state expanded from a 64-bit seed via
/// SplitMix64. Small state and fast enough for the per-step simulation loop.
class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed = 0) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on (0, 1]; never returns 0 so log() is always safe.
    double next_uniform() {
        const uint64_t bits = next_u64() >> 11;  // 53 significant bits
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via the Marsaglia polar method (deterministic per
    /// stream; pairs are cached).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_uniform() - 1.0;
            v = 2.0 * next_uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    /// Exponential with unit mean.
    double next_exponential() { return -std::log(next_uniform()); }

    /// Pareto jump size: X = floor * U^{-1/alpha}, the law of a stable
    /// subordinator jump conditioned to exceed `floor`.
    double next_pareto(double floor, double alpha) {
        return floor * std::pow(next_uniform(), -1.0 / alpha);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace expfunc
