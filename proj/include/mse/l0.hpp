#pragma once

#include <cstdint>
#include <vector>

#include "mse/hashing.hpp"
#include "mse/stream.hpp"

namespace mse {

// One 1-sparse recovery cell: linear in the frequency vector, so inserts and
// deletes cancel. Fingerprint is sum of freq * r^id over Z_P for a per-sketch
// random r; a false 1-sparse verification happens w.p. <= support/P.
struct L0Cell {
    long long count = 0;  // sum of frequencies
    long long sum = 0;    // sum of freq * id
    uint64_t fp = 0;      // sum of freq * r^id mod P

    bool empty_cell() const { return count == 0 && sum == 0 && fp == 0; }
};

// Level-sampling distinct-count sketch: ceil(log2 n)+1 subsampling levels,
// level l admits an item iff the low l bits of its pairwise hash are zero
// (level 0 admits everything).
struct L0Sketch {
    uint64_t universe = 0;
    int levels = 0;
    PolyHash level_hash;  // pairwise independent
    uint64_t fp_base = 0;
    std::vector<L0Cell> cells;

    void update(uint64_t item, int delta);
    // fp_pow = fp_base^item mod P, when the caller already has it.
    void update_with_pow(uint64_t item, int delta, uint64_t fp_pow);
    bool empty() const;

    // 0 on the empty sketch; exact whenever the true support is <= 1 (the
    // level-0 cell sees everything); otherwise 2^l for the shallowest level
    // that resolves: a verified 1-sparse cell gives 2^l, a cell that went
    // empty under a still-crowded parent gives 2^l as well.
    long long estimate() const;

    std::size_t words_used() const;
};

L0Sketch make_l0_sketch(uint64_t universe, uint64_t seed);
void l0_update(L0Sketch& sk, uint64_t item, int delta);
long long l0_estimate(const L0Sketch& sk);

// Median of R independent sketches fed identically; the success booster every
// caller uses. Level hashes are independent per sketch; the fingerprint base
// is shared so r^item is computed once per update (the base only guards
// 1-sparse verification, not the estimates).
struct L0Estimator {
    std::vector<L0Sketch> sketches;
    uint64_t shared_fp_base = 0;

    void update(uint64_t item, int delta);
    long long estimate() const;
    std::size_t words_used() const;
};

int default_l0_reps(uint64_t universe);  // 7 * ceil(log2 n)
L0Estimator make_l0_estimator(uint64_t universe, int reps, uint64_t seed);

struct FolkloreConfig {
    int n = 0;
    std::vector<int> side;  // sample S from here; empty = all of V (general mode)
    int sample_size = 0;    // 0 = ceil(sqrt(n))
    int reps = 0;           // 0 = default_l0_reps(n)
    uint64_t seed = 0;
};

struct FolkloreResult {
    long long k = 0;              // min(median L0 estimate, ceil(sqrt(n)))
    long long neighbors_est = 0;  // the raw median estimate of |N(S)|
    std::vector<int> sample;      // the set S
    bool general_mode = false;    // S drawn from all of V (experimental)
    std::size_t words_used = 0;
};

// Folklore sqrt(n)-approximation: random S of ~sqrt(n) vertices, |N(S)|
// estimated by L0 under inserts and deletes, k = min(est, sqrt(n));
// Omega(k) <= opt <= O(k sqrt(n)) with the calibrated constants recorded in
// the tests.
FolkloreResult folklore_estimate(const EdgeStream& stream, const FolkloreConfig& cfg);

}  // namespace mse
