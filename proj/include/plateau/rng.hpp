#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace plateau {

// Hand-rolled generator stack so that streams are bit-stable across platforms
// and substreams can be derived without coordination. <random>'s
// distributions are implementation-defined, which would break the
// reproducibility contract.

/// SplitMix64; used to expand seeds into generator state.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

std::uint64_t hash_label(std::string_view label);

/// xoshiro256++ core generator.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
    }
    std::uint64_t next_u64() {
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
    /// Uniform on the open interval (0,1); never returns an endpoint.
    double next_unit() { return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

/// A labeled, seeded random stream. Identical (seed, label, index) always
/// reproduces the identical variate sequence; distinct labels or indices give
/// streams that are independent by construction, so parallel workers never
/// share state.
class SeededStream {
public:
    SeededStream(std::uint64_t seed, std::string label)
        : seed_(seed), label_(std::move(label)), gen_(derive_key(seed_, label_, 0)) {}

    SeededStream(std::uint64_t seed, std::string label, std::uint64_t index)
        : seed_(seed), label_(std::move(label)), gen_(derive_key(seed_, label_, index)) {}

    /// Independent child stream, e.g. one per replication.
    SeededStream substream(std::uint64_t index) const { return {seed_, label_, index + 1}; }

    std::uint64_t seed() const { return seed_; }
    const std::string& label() const { return label_; }

    std::uint64_t next_u64() { return gen_.next_u64(); }
    double next_unit() { return gen_.next_unit(); }
    double next_exponential(double rate) { return -std::log(next_unit()) / rate; }
    /// Pareto with survival (scale/x)^index for x >= scale.
    double next_pareto(double scale, double index) {
        return scale * std::exp(-std::log(next_unit()) / index);
    }
    /// Exact Poisson count (inversion for small mean, PTRD for large).
    std::uint64_t next_poisson(double mean);

private:
    static std::uint64_t derive_key(std::uint64_t seed, std::string_view label, std::uint64_t index);
    std::uint64_t seed_;
    std::string label_;
    Xoshiro256 gen_;
};

}  // namespace plateau
