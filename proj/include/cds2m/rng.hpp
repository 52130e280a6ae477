#pragma once

#include <cstdint>
#include <random>

namespace cds2m {

// All randomness flows through mt19937_64 plus the fixed mappings below.
// std:: distributions are avoided on purpose: their algorithms are not
// pinned by the standard, while mt19937_64 itself is, so identical seeds
// reproduce identical runs on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent RNG stream for iteration `index` of a run seeded with `seed`.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

// Uniform double in [0, 1), 53 usable bits.
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), rejection sampled to avoid modulo bias.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

} // namespace cds2m
