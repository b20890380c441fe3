#include "snrep/rng.hpp"

#include "snrep/errors.hpp"

#include <limits>

namespace snrep {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng Rng::for_lane(uint64_t seed, uint64_t lane) {
    return Rng(mix64(seed + (lane + 1) * 0x9E3779B97F4A7C15ull));
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        throw PreconditionError("Rng::below: bound must be positive");
    }
    if ((bound & (bound - 1)) == 0) {
        return next() & (bound - 1);
    }
    const uint64_t max = std::numeric_limits<uint64_t>::max();
    const uint64_t limit = max - (max % bound + 1) % bound;
    uint64_t draw;
    do {
        draw = next();
    } while (draw > limit);
    return draw % bound;
}

BigInt Rng::below_big(const BigInt& bound) {
    if (bound <= 0) {
        throw PreconditionError("Rng::below_big: bound must be positive");
    }
    if (bound <= std::numeric_limits<uint64_t>::max()) {
        return BigInt(below(bound.convert_to<uint64_t>()));
    }
    unsigned words = 0;
    for (BigInt block = 1; block < bound; block <<= 64) {
        ++words;
    }
    const BigInt block_size = BigInt(1) << (64 * words);
    const BigInt limit = (block_size / bound) * bound; // accept draws < limit
    while (true) {
        BigInt draw = 0;
        for (unsigned w = 0; w < words; ++w) {
            draw = (draw << 64) | BigInt(next());
        }
        if (draw < limit) {
            return draw % bound;
        }
    }
}

} // namespace snrep
