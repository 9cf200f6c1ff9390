#include "mse/l0.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mse/errors.hpp"
#include "mse/estimator.hpp"
#include "mse/rng.hpp"

namespace mse {

namespace {

constexpr uint64_t P = PolyHash::P;

inline uint64_t mulmod_p(uint64_t a, uint64_t b) {
    __uint128_t z = static_cast<__uint128_t>(a) * b;
    uint64_t lo = static_cast<uint64_t>(z & P);
    uint64_t hi = static_cast<uint64_t>(z >> 61);
    uint64_t s = lo + hi;
    if (s >= P) s -= P;
    return s;
}

uint64_t powmod_p(uint64_t base, uint64_t e) {
    uint64_t acc = 1;
    base %= P;
    while (e) {
        if (e & 1) acc = mulmod_p(acc, base);
        base = mulmod_p(base, base);
        e >>= 1;
    }
    return acc;
}

bool verified_one_sparse(const L0Cell& c, uint64_t universe, uint64_t fp_base) {
    if (c.count <= 0) return false;
    if (c.sum < 0 || c.sum % c.count != 0) return false;
    long long id = c.sum / c.count;
    if (id < 0 || static_cast<uint64_t>(id) >= universe) return false;
    uint64_t expect = mulmod_p(static_cast<uint64_t>(c.count) % P, powmod_p(fp_base, static_cast<uint64_t>(id)));
    return c.fp == expect;
}

}  // namespace

void L0Sketch::update(uint64_t item, int delta) {
    update_with_pow(item, delta, powmod_p(fp_base, item));
}

void L0Sketch::update_with_pow(uint64_t item, int delta, uint64_t fp_pow) {
    if (delta == 0) return;
    uint64_t h = level_hash(item);
    uint64_t mag = mulmod_p(static_cast<uint64_t>(delta > 0 ? delta : -delta), fp_pow);
    uint64_t fp_delta = (delta > 0) ? mag : (mag == 0 ? 0 : P - mag);
    for (int l = 0; l < levels; ++l) {
        if (l > 0 && (h & ((uint64_t(1) << l) - 1)) != 0) break;  // level l admits iff low l bits zero
        L0Cell& c = cells[l];
        c.count += delta;
        c.sum += static_cast<long long>(delta) * static_cast<long long>(item);
        c.fp += fp_delta;
        if (c.fp >= P) c.fp -= P;
    }
}

bool L0Sketch::empty() const {
    for (const auto& c : cells)
        if (!c.empty_cell()) return false;
    return true;
}

long long L0Sketch::estimate() const {
    if (cells[0].empty_cell()) return 0;
    if (verified_one_sparse(cells[0], universe, fp_base)) return 1;
    for (int l = 1; l < levels; ++l) {
        if (verified_one_sparse(cells[l], universe, fp_base)) return 1LL << l;
        if (cells[l].empty_cell()) return 1LL << l;  // crowd died between levels
    }
    return 1LL << levels;
}

std::size_t L0Sketch::words_used() const {
    return 3 * cells.size() + level_hash.words_used() + 2;
}

L0Sketch make_l0_sketch(uint64_t universe, uint64_t seed) {
    if (universe < 1) throw ParameterError("l0 sketch universe must be >= 1");
    L0Sketch sk;
    sk.universe = universe;
    sk.levels = ceil_log2(static_cast<long long>(universe)) + 1;
    sk.level_hash = draw_hash(2, child_seed(seed, 1));
    Rng rng = make_rng(child_seed(seed, 2));
    sk.fp_base = 2 + rand_below(rng, P - 3);
    sk.cells.assign(sk.levels, L0Cell{});
    return sk;
}

void l0_update(L0Sketch& sk, uint64_t item, int delta) { sk.update(item, delta); }
long long l0_estimate(const L0Sketch& sk) { return sk.estimate(); }

void L0Estimator::update(uint64_t item, int delta) {
    uint64_t pw = powmod_p(shared_fp_base, item);
    for (auto& sk : sketches) sk.update_with_pow(item, delta, pw);
}

long long L0Estimator::estimate() const {
    std::vector<long long> ests;
    ests.reserve(sketches.size());
    for (const auto& sk : sketches) ests.push_back(sk.estimate());
    std::sort(ests.begin(), ests.end());
    return ests[ests.size() / 2];
}

std::size_t L0Estimator::words_used() const {
    std::size_t w = 0;
    for (const auto& sk : sketches) w += sk.words_used();
    return w;
}

int default_l0_reps(uint64_t universe) { return 7 * std::max(1, ceil_log2(static_cast<long long>(universe))); }

L0Estimator make_l0_estimator(uint64_t universe, int reps, uint64_t seed) {
    if (reps < 1) throw ParameterError("l0 estimator needs reps >= 1");
    L0Estimator est;
    Rng rng = make_rng(child_seed(seed, 99));
    est.shared_fp_base = 2 + rand_below(rng, P - 3);
    est.sketches.reserve(reps);
    for (int i = 0; i < reps; ++i) {
        est.sketches.push_back(make_l0_sketch(universe, child_seed(seed, 100 + i)));
        est.sketches.back().fp_base = est.shared_fp_base;
    }
    return est;
}

FolkloreResult folklore_estimate(const EdgeStream& stream, const FolkloreConfig& cfg) {
    if (cfg.n != stream.n) throw ConfigError("folklore config n does not match stream");
    FolkloreResult res;

    std::vector<int> side = cfg.side;
    if (side.empty()) {
        res.general_mode = true;
        side.resize(cfg.n);
        for (int v = 0; v < cfg.n; ++v) side[v] = v;
    }
    for (int v : side)
        if (v < 0 || v >= cfg.n) throw ParameterError("bipartition vertex out of range");

    int sqrt_n = 1;
    while (static_cast<long long>(sqrt_n) * sqrt_n < cfg.n) ++sqrt_n;
    int s = cfg.sample_size > 0 ? cfg.sample_size : sqrt_n;
    s = std::min<int>(s, static_cast<int>(side.size()));
    int reps = cfg.reps > 0 ? cfg.reps : default_l0_reps(static_cast<uint64_t>(cfg.n));

    // S: s vertices without replacement (partial Fisher-Yates)
    Rng rng = make_rng(child_seed(cfg.seed, 7));
    for (int i = 0; i < s; ++i) {
        std::size_t j = i + rand_below(rng, side.size() - i);
        std::swap(side[i], side[j]);
    }
    res.sample.assign(side.begin(), side.begin() + s);
    std::unordered_set<int> in_s(res.sample.begin(), res.sample.end());

    L0Estimator est = make_l0_estimator(static_cast<uint64_t>(cfg.n), reps, child_seed(cfg.seed, 8));
    stream.for_each([&](const StreamEvent& ev) {
        int delta = (ev.kind == EventKind::Insert) ? 1 : -1;
        if (in_s.count(ev.u)) est.update(static_cast<uint64_t>(ev.v), delta);
        if (in_s.count(ev.v)) est.update(static_cast<uint64_t>(ev.u), delta);
    });

    res.neighbors_est = est.estimate();
    res.k = std::min<long long>(res.neighbors_est, sqrt_n);
    res.words_used = est.words_used() + res.sample.size();
    return res;
}

}  // namespace mse
