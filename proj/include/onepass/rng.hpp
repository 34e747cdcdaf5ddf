#pragma once

#include <cstdint>

namespace onepass {

// Stateless counter-based randomness: every variate is a pure function of
// (seed, stream, counter), so draws are reproducible and parallelizable
// without shared generator state.

namespace detail {

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

} // namespace detail

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
    std::uint64_t k = detail::mix64(seed + 0x9e3779b97f4a7c15ULL);
    k = detail::mix64(stream ^ k);
    return detail::mix64(counter ^ k);
}

// Uniform variate in [0, 1), 53-bit resolution.
inline double counter_uniform01(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t counter) {
    return static_cast<double>(counter_bits(seed, stream, counter) >> 11) *
           0x1.0p-53;
}

} // namespace onepass
