#pragma once

#include <cstdint>
#include <random>

namespace mstci::rng {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-item seed derivation so parallel work is independent of scheduling.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x51ed2701u));
}

inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
    return splitmix64(derive_seed(master, a) ^ splitmix64(b + 0x2545f491u));
}

// Unbiased uniform draw from [0, bound) by masked rejection; avoids the
// implementation-defined std::uniform_int_distribution.
inline uint64_t uniform_below(std::mt19937_64& gen, uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t mask = ~0ull >> __builtin_clzll(bound - 1 | 1);
    uint64_t r;
    do {
        r = gen() & mask;
    } while (r >= bound);
    return r;
}

}  // namespace mstci::rng
