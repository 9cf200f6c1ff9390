#include "mse/hashing.hpp"

#include <cmath>

#include "mse/errors.hpp"
#include "mse/rng.hpp"

namespace mse {

namespace {

// (a * b) mod (2^61 - 1) via 128-bit product and Mersenne folding.
inline uint64_t mulmod(uint64_t a, uint64_t b) {
    __uint128_t z = static_cast<__uint128_t>(a) * b;
    uint64_t lo = static_cast<uint64_t>(z & PolyHash::P);
    uint64_t hi = static_cast<uint64_t>(z >> 61);
    uint64_t s = lo + hi;
    if (s >= PolyHash::P) s -= PolyHash::P;
    return s;
}

inline uint64_t addmod(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s >= PolyHash::P) s -= PolyHash::P;
    return s;
}

}  // namespace

uint64_t PolyHash::operator()(uint64_t x) const {
    x %= P;
    uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = addmod(mulmod(acc, x), *it);
    return acc;
}

PolyHash draw_hash(int k, uint64_t seed) {
    if (k < 2) throw ParameterError("draw_hash: independence order k must be >= 2");
    Rng rng = make_rng(seed);
    PolyHash h;
    h.coeffs.resize(k);
    for (auto& c : h.coeffs) c = rand_below(rng, PolyHash::P);
    return h;
}

SampleSpec sample_predicate(double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ParameterError("sample_predicate: p outside [0,1]");
    SampleSpec spec;
    spec.p = p;
    spec.hash = draw_hash(4, seed);
    spec.threshold = static_cast<uint64_t>(std::floor(p * static_cast<double>(PolyHash::P)));
    if (p == 1.0) spec.threshold = PolyHash::P;  // all values pass
    return spec;
}

GroupAssign group_assign(int g_count, uint64_t seed) {
    if (g_count < 1) throw ParameterError("group_assign: g_count must be >= 1");
    GroupAssign ga;
    ga.g_count = g_count;
    ga.hash = draw_hash(4, seed);
    return ga;
}

}  // namespace mse
