#pragma once

#include "snrep/numeric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace snrep {

/// SplitMix64 finalizer; used to derive per-lane stream seeds.
uint64_t mix64(uint64_t x);

/**
 * Reproducible random source.
 *
 * Wraps std::mt19937_64, whose raw output sequence is fully specified by
 * the C++ standard. Every derived draw below uses only integer arithmetic
 * on that raw output (rejection sampling, never std::*_distribution), so
 * a given seed produces identical results on every platform and compiler.
 */
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Stream for parallel lane `lane` of a run seeded with `seed`:
    /// an Rng seeded with mix64(seed + (lane + 1) * 0x9E3779B97F4A7C15).
    static Rng for_lane(uint64_t seed, uint64_t lane);

    /// Raw 64-bit engine output.
    uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound >= 1. Unbiased via rejection.
    uint64_t below(uint64_t bound);

    /// Uniform BigInt in [0, bound); bound >= 1. Unbiased via rejection.
    BigInt below_big(const BigInt& bound);

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (size_t i = values.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace snrep
