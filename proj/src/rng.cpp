#include "plateau/rng.hpp"

#include <cmath>

namespace plateau {

std::uint64_t hash_label(std::string_view label) {
    // FNV-1a 64-bit.
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t SeededStream::derive_key(std::uint64_t seed, std::string_view label,
                                       std::uint64_t index) {
    SplitMix64 sm{seed};
    std::uint64_t k = sm.next() ^ hash_label(label);
    SplitMix64 sm2{k};
    std::uint64_t k2 = sm2.next() ^ (index * 0x9E3779B97F4A7C15ull);
    SplitMix64 sm3{k2};
    return sm3.next();
}

std::uint64_t SeededStream::next_poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 10.0) {
        // Knuth product-of-uniforms inversion.
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_unit();
        } while (p > limit);
        return k - 1;
    }
    // PTRS transformed rejection (Hormann 1993), valid for mean >= 10.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        const double u = next_unit() - 0.5;
        const double v = next_unit();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (kf < 0.0) continue;
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
        if (us < 0.013 && v > us) continue;
        const double k = kf;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            -mean + k * log_mean - std::lgamma(k + 1.0))
            return static_cast<std::uint64_t>(kf);
    }
}

}  // namespace plateau
