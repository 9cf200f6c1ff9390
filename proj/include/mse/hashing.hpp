#pragma once

#include <cstdint>
#include <vector>

namespace mse {

// Polynomial hash over the prime field Z_P with P = 2^61 - 1. A random
// polynomial of degree k-1 gives a k-wise independent family on [0, P).
// Storage is k words.
struct PolyHash {
    static constexpr uint64_t P = (uint64_t(1) << 61) - 1;

    std::vector<uint64_t> coeffs;  // a0..a_{k-1}, reduced mod P

    uint64_t operator()(uint64_t x) const;
    std::size_t words_used() const { return coeffs.size(); }
};

// Coefficients drawn uniformly from [0, P); same seed gives the same hash.
PolyHash draw_hash(int k, uint64_t seed);

// Vertex-sampling predicate: v is sampled iff h(v) < threshold, where
// threshold = floor(p * P). Inclusion probability is within 1/P of p, and any
// four distinct vertices are included independently (k = 4).
struct SampleSpec {
    double p = 1.0;
    PolyHash hash;
    uint64_t threshold = 0;

    bool operator()(uint64_t v) const {
        if (threshold >= PolyHash::P) return true;  // p = 1 keeps everything
        return hash(v) < threshold;
    }
    std::size_t words_used() const { return hash.words_used() + 2; }
};

SampleSpec sample_predicate(double p, uint64_t seed);

// Four-wise independent group assignment via h(v) mod g_count. The mod
// bucketing is off uniform by at most g_count/P, which we ignore.
struct GroupAssign {
    int g_count = 1;
    PolyHash hash;

    int operator()(uint64_t v) const { return static_cast<int>(hash(v) % static_cast<uint64_t>(g_count)); }
    std::size_t words_used() const { return hash.words_used() + 1; }
};

GroupAssign group_assign(int g_count, uint64_t seed);

}  // namespace mse
