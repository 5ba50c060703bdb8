#pragma once

#include <cstdint>

namespace qrs {

/// SplitMix64 (Steele, Lea, Flood): a 64-bit counter-based generator with a
/// fully specified state transition, so sequences reproduce across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix(state);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

} // namespace qrs
