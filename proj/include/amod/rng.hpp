#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace amod {

/// Deterministic draws built directly on mt19937_64 output, so streams are
/// reproducible across standard library implementations (the distribution
/// classes in <random> are not).

/// Uniform double in [0, 1).
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

/// Exponential inter-arrival time with the given rate (inverse CDF).
inline double exponential(std::mt19937_64& gen, double rate) {
    return -std::log1p(-uniform01(gen)) / rate;
}

} // namespace amod
