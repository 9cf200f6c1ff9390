#pragma once

#include <cstdint>
#include <random>

namespace mse {

// splitmix64, used both as a bit mixer and to derive child seeds.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic seed splitting: child_seed(s, tag) streams are independent
// for distinct tags. Tags are small integers chosen by the caller.
inline uint64_t child_seed(uint64_t master, uint64_t tag) {
    return splitmix64(master ^ splitmix64(tag + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed) { return Rng(splitmix64(seed)); }

// Uniform integer in [0, bound), bound >= 1.
inline uint64_t rand_below(Rng& rng, uint64_t bound) {
    return std::uniform_int_distribution<uint64_t>(0, bound - 1)(rng);
}

}  // namespace mse
