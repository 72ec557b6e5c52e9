#pragma once

#include "zkfuzz/bigint.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace zkfuzz {

// Deterministic random stream. std::mt19937_64 output is fully specified by
// the standard; the bounded draws below avoid std::uniform_int_distribution,
// whose mapping is implementation-defined, so identical seeds give identical
// streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling over the largest multiple of n that fits.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    // Uniform in [0, bound) for arbitrary-precision bounds.
    BigInt big_below(const BigInt &bound) {
        if (bound <= 1)
            return 0;
        const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
        const unsigned words = (bits + 63) / 64;
        BigInt v;
        do {
            v = 0;
            for (unsigned i = 0; i < words; ++i) {
                v <<= 64;
                v |= BigInt(engine_());
            }
            v >>= (words * 64 - bits);
        } while (v >= bound);
        return v;
    }

    // True with probability roughly p (micro-probability resolution).
    bool chance(double p) {
        if (p <= 0.0)
            return false;
        if (p >= 1.0)
            return true;
        const uint64_t threshold = static_cast<uint64_t>(p * 1'000'000.0 + 0.5);
        return below(1'000'000) < threshold;
    }

    template <typename T> const T &pick(const std::vector<T> &items) {
        return items[below(items.size())];
    }

private:
    std::mt19937_64 engine_;
};

} // namespace zkfuzz
