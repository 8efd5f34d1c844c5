#pragma once

#include <cstdint>
#include <random>

namespace wdom {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; bijective on 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for substream `component` of a master seed. Components drawn from the
// same master are decorrelated by the mixing; the same (seed, component)
// always yields the same substream.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t component) {
    return mix64(seed ^ mix64(component));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

}  // namespace wdom
