#include "mse/hard_instances.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "mse/errors.hpp"
#include "mse/rng.hpp"

namespace mse {

bool BhhInstance::valid() const {
    if (arity < 2 || n <= 0 || n % (2 * arity) != 0) return false;
    if (static_cast<int>(x.size()) != n) return false;
    if (static_cast<int>(blocks.size()) != n / arity) return false;
    std::vector<bool> seen(n, false);
    int weight = 0;
    for (int i = 0; i < n; ++i) weight += x[i] ? 1 : 0;
    if (weight != n / 2) return false;
    int want_parity = (label == Label::No) ? 1 : 0;
    for (const auto& blk : blocks) {
        if (static_cast<int>(blk.size()) != arity) return false;
        int parity = 0;
        for (int idx : blk) {
            if (idx < 0 || idx >= n || seen[idx]) return false;
            seen[idx] = true;
            parity ^= x[idx];
        }
        if (parity != want_parity) return false;
    }
    return true;
}

BhhInstance gen_bhh0(int n, int arity, Label label, uint64_t seed) {
    if (arity < 2) throw ParameterError("hypermatching arity must be >= 2");
    if (n <= 0 || n % (2 * arity) != 0) throw SizeError("n must be a positive multiple of 2*arity");
    if (label == Label::No && arity % 2 != 0)
        throw InfeasibleLabel("No label needs even arity");
    int want_parity = (label == Label::No) ? 1 : 0;
    int blocks_count = n / arity;
    // total weight parity is forced by the per-block parities
    if (((blocks_count * want_parity) & 1) != ((n / 2) & 1))
        throw InfeasibleLabel("weight n/2 unreachable under the block parity");

    Rng rng = make_rng(seed);
    BhhInstance inst;
    inst.n = n;
    inst.arity = arity;
    inst.label = label;
    inst.x.assign(n, 0);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int b = 0; b < blocks_count; ++b)
        inst.blocks.emplace_back(perm.begin() + b * arity, perm.begin() + (b + 1) * arity);

    // per block: arity-1 free bits, last bit fixes the parity
    for (const auto& blk : inst.blocks) {
        int parity = 0;
        for (int i = 0; i + 1 < arity; ++i) {
            int bit = static_cast<int>(rand_below(rng, 2));
            inst.x[blk[i]] = static_cast<uint8_t>(bit);
            parity ^= bit;
        }
        inst.x[blk.back()] = static_cast<uint8_t>(parity ^ want_parity);
    }

    // repair total weight to n/2 with same-block 2-bit flips (parity preserving)
    auto weight = [&] {
        int w = 0;
        for (uint8_t b : inst.x) w += b;
        return w;
    };
    int w = weight();
    while (w != n / 2) {
        int need = (w < n / 2) ? 0 : 1;  // flip two bits of this value
        std::vector<int> candidates;
        for (int b = 0; b < blocks_count; ++b) {
            int cnt = 0;
            for (int idx : inst.blocks[b]) cnt += (inst.x[idx] == need) ? 1 : 0;
            if (cnt >= 2) candidates.push_back(b);
        }
        assert(!candidates.empty());  // pigeonhole: always a block with two flippable bits
        int b = candidates[rand_below(rng, candidates.size())];
        std::vector<int> spots;
        for (int idx : inst.blocks[b])
            if (inst.x[idx] == need) spots.push_back(idx);
        std::shuffle(spots.begin(), spots.end(), rng);
        inst.x[spots[0]] ^= 1;
        inst.x[spots[1]] ^= 1;
        w += (need == 0) ? 2 : -2;
    }
    assert(inst.valid());
    return inst;
}

Graph bhh_to_matching_graph(const BhhInstance& inst) {
    if (!inst.valid()) throw ParameterError("invalid BHH instance");
    if (inst.arity % 2 != 0) throw ParameterError("matching-graph reduction needs even arity");
    int n = inst.n;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        if (inst.x[i]) pairs.emplace_back(i, n + i);
    for (const auto& blk : inst.blocks) {
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t b = a + 1; b < blk.size(); ++b)
                pairs.emplace_back(n + blk[a], n + blk[b]);
    }
    return Graph::from_pairs(2 * n, pairs);
}

std::optional<RsGraph> build_rs_graph(int N, int r, int t, uint64_t seed, int restarts) {
    if (r < 1 || t < 1 || 2 * r > N) throw ParameterError("need 2r <= N, r >= 1, t >= 1");
    Rng rng = make_rng(seed);
    std::vector<int> ids(N);

    const int attempts_per_restart = 400 * t;
    for (int restart = 0; restart < restarts; ++restart) {
        RsGraph rs;
        rs.N = N;
        rs.r = r;
        rs.t = t;
        std::vector<std::pair<int, int>> union_edges;
        std::vector<std::vector<bool>> matched_in;  // per accepted matching

        int attempts = 0;
        while (static_cast<int>(rs.matchings.size()) < t && attempts < attempts_per_restart) {
            ++attempts;
            std::iota(ids.begin(), ids.end(), 0);
            for (int i = 0; i < 2 * r; ++i) {
                std::size_t j = i + rand_below(rng, ids.size() - i);
                std::swap(ids[i], ids[j]);
            }
            std::vector<bool> in_cand(N, false);
            for (int i = 0; i < 2 * r; ++i) in_cand[ids[i]] = true;

            // no existing edge may land inside the candidate's vertex set
            bool ok = true;
            for (const auto& [a, b] : union_edges) {
                if (in_cand[a] && in_cand[b]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            Matching cand;
            for (int i = 0; ok && i < r; ++i) {
                int a = ids[2 * i], b = ids[2 * i + 1];
                // a new edge inside an accepted matching's vertex set breaks
                // that matching's inducedness
                for (const auto& m : matched_in) {
                    if (m[a] && m[b]) {
                        ok = false;
                        break;
                    }
                }
                if (a > b) std::swap(a, b);
                cand.edges.emplace_back(a, b);
            }
            if (!ok) continue;

            std::sort(cand.edges.begin(), cand.edges.end());
            for (const auto& e : cand.edges) union_edges.push_back(e);
            matched_in.push_back(in_cand);
            rs.matchings.push_back(std::move(cand));
        }
        if (static_cast<int>(rs.matchings.size()) == t && validate_rs_graph(rs)) return rs;
    }
    return std::nullopt;
}

SmsInstance gen_sms(int n, int k, const std::vector<Label>& profile, uint64_t seed) {
    if (k < 2) throw SizeError("need k >= 2 players");
    if (static_cast<int>(profile.size()) != k) throw SizeError("profile length must equal k");
    if ((2LL * n) % k != 0 || ((2 * n / k) % 4) != 0)
        throw SizeError("need 2n/k to be a multiple of 4");
    int m = 2 * n / k;    // per-player BHM0 size
    int half = n / k;     // shared block size = weight of each x

    SmsInstance inst;
    inst.n = n;
    inst.k = k;
    inst.profile = profile;

    Rng rng = make_rng(child_seed(seed, 1));
    inst.sigma.resize(n + half);
    std::iota(inst.sigma.begin(), inst.sigma.end(), 0);
    std::shuffle(inst.sigma.begin(), inst.sigma.end(), rng);

    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < k; ++i) {
        BhhInstance bi = gen_bhh0(m, 2, profile[i], child_seed(seed, 10 + i));
        // sigma_i: the l-th smallest 1-index lands in the shared block, the
        // l-th smallest 0-index in player i's private block
        std::vector<int> map(m, -1);
        int ones = 0, zeros = 0;
        for (int j = 0; j < m; ++j) {
            if (bi.x[j])
                map[j] = inst.sigma[ones++];
            else
                map[j] = inst.sigma[(i + 1) * half + zeros++];
        }
        Matching pm;
        for (const auto& blk : bi.blocks) {
            int a = map[blk[0]], b = map[blk[1]];
            if (a > b) std::swap(a, b);
            pm.edges.emplace_back(a, b);
            all_edges.emplace_back(a, b);
        }
        std::sort(pm.edges.begin(), pm.edges.end());
        inst.player_matchings.push_back(std::move(pm));
    }
    inst.graph = Graph::from_pairs(n + half, all_edges);
    return inst;
}

namespace {

// private relabeling shared by the dense-alpha and dynamic-eps builders:
// vertices matched by matching j* map to per-player fresh labels, everything
// else to the shared sigma image
struct Relabeler {
    const std::vector<int>& sigma;
    int N;
    int two_r;
    std::vector<int> private_rank;  // -1 when shared

    Relabeler(const RsGraph& rs, int j_star, const std::vector<int>& sigma)
        : sigma(sigma), N(rs.N), two_r(2 * rs.r), private_rank(rs.N, -1) {
        std::vector<int> vs = rs.matchings[j_star].vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) private_rank[vs[i]] = static_cast<int>(i);
    }

    int operator()(int player, int v) const {
        if (private_rank[v] >= 0) return sigma[N + player * two_r + private_rank[v]];
        return sigma[v];
    }
};

std::vector<int> shuffled_identity(int n, Rng& rng) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

std::vector<uint8_t> uniform_half_weight(int r, Rng& rng) {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<uint8_t> x(r, 0);
    for (int i = 0; i < r / 2; ++i) x[idx[i]] = 1;
    return x;
}

}  // namespace

DenseAlphaInstance gen_dense_alpha(const RsGraph& rs, int alpha, int theta, uint64_t seed) {
    if (!validate_rs_graph(rs)) throw ParameterError("invalid RS graph");
    if (alpha < 1 || (theta != 0 && theta != 1)) throw ParameterError("bad alpha or theta");
    long long num = static_cast<long long>(alpha + 1) * rs.N;
    if (num % rs.r != 0) throw ParameterError("(alpha+1)N/r must be integral");

    DenseAlphaInstance inst;
    inst.N = rs.N;
    inst.r = rs.r;
    inst.t = rs.t;
    inst.alpha = alpha;
    inst.theta = theta;
    inst.k = static_cast<int>(num / rs.r);
    inst.n = rs.N + 2 * inst.k * rs.r;

    Rng rng = make_rng(child_seed(seed, 1));
    inst.j_star = static_cast<int>(rand_below(rng, rs.t));
    std::vector<int> sigma = shuffled_identity(inst.n, rng);
    Relabeler relabel(rs, inst.j_star, sigma);

    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < inst.k; ++i) {
        std::vector<uint8_t> xi(rs.t);
        for (int j = 0; j < rs.t; ++j)
            xi[j] = (j == inst.j_star) ? static_cast<uint8_t>(theta)
                                       : static_cast<uint8_t>(rand_below(rng, 2));
        std::vector<std::pair<int, int>> mine;
        for (int j = 0; j < rs.t; ++j) {
            if (!xi[j]) continue;  // matching removed from this player's copy
            for (auto [a, b] : rs.matchings[j].edges) {
                int la = relabel(i, a), lb = relabel(i, b);
                if (la > lb) std::swap(la, lb);
                mine.emplace_back(la, lb);
                all_edges.emplace_back(la, lb);
            }
        }
        inst.x.push_back(std::move(xi));
        inst.player_edges.push_back(std::move(mine));
    }
    inst.graph = Graph::from_pairs(inst.n, all_edges);
    return inst;
}

EpsInstance gen_eps_instance(EpsVariant variant, const RsGraph& rs, double eps, Label label,
                             uint64_t seed) {
    if (!validate_rs_graph(rs)) throw ParameterError("invalid RS graph");
    if (eps <= 0 || eps >= 0.5) throw ParameterError("eps must be in (0, 1/2)");
    int N = rs.N, r = rs.r;

    EpsInstance inst;
    inst.variant = variant;
    inst.N = N;
    inst.r = r;
    inst.t = rs.t;
    inst.eps = eps;
    inst.label = label;

    double c_rs = static_cast<double>(r) / N;
    inst.p = (variant == EpsVariant::InsertionOnly)
                 ? static_cast<int>(std::floor(c_rs / (2 * eps) + 1e-9))
                 : static_cast<int>(std::floor(1.0 / (8 * eps) + 1e-9));
    if (inst.p < 2) throw ParameterError("arity p below 2; decrease eps");
    if (inst.p % 2 != 0) throw ParameterError("arity p must be even for the gap claims");
    if (r % (2 * inst.p) != 0) throw ParameterError("r must be a multiple of 2p");

    Rng rng = make_rng(child_seed(seed, 1));
    inst.j_star = static_cast<int>(rand_below(rng, rs.t));
    inst.embedded = gen_bhh0(r, inst.p, label, child_seed(seed, 2));

    const auto& mstar = rs.matchings[inst.j_star].edges;  // e_idx = (u, v), u < v

    if (variant == EpsVariant::InsertionOnly) {
        inst.n = 2 * N - 2 * r;
        // alice: every matching restricted by its vector; j* carries the
        // embedded x, the others draw fresh half-weight vectors
        for (int j = 0; j < rs.t; ++j) {
            std::vector<uint8_t> xj =
                (j == inst.j_star) ? inst.embedded.x : uniform_half_weight(r, rng);
            for (int idx = 0; idx < r; ++idx)
                if (xj[idx]) inst.alice_edges.push_back(rs.matchings[j].edges[idx]);
        }
        // bob: perfect matching from V1 minus V(M_j*) onto V2, plus the
        // p-clique family on the right endpoints of M_j*
        std::vector<bool> in_star(N, false);
        for (auto [a, b] : mstar) in_star[a] = in_star[b] = true;
        int v2 = N;
        for (int v = 0; v < N; ++v)
            if (!in_star[v]) inst.bob_edges.emplace_back(v, v2++);
        assert(v2 == inst.n);
        for (const auto& blk : inst.embedded.blocks) {
            for (std::size_t a = 0; a < blk.size(); ++a)
                for (std::size_t b = a + 1; b < blk.size(); ++b)
                    inst.bob_edges.emplace_back(mstar[blk[a]].second, mstar[blk[b]].second);
        }
        std::vector<std::pair<int, int>> all = inst.alice_edges;
        all.insert(all.end(), inst.bob_edges.begin(), inst.bob_edges.end());
        inst.graph = Graph::from_pairs(inst.n, all);

        long long base = static_cast<long long>(N) - 2 * r + 3LL * r / 4;
        inst.opt_yes_value = base;
        inst.opt_no_bound = base - r / (2LL * inst.p);
    } else {
        double kf = 4.0 * N / (eps * r);
        inst.k = static_cast<int>(std::llround(kf));
        if (inst.k < 1 || std::fabs(kf - inst.k) > 1e-6)
            throw ParameterError("player count 4N/(eps r) must be integral");
        inst.n = N + 2 * inst.k * r;

        std::vector<int> sigma = shuffled_identity(inst.n, rng);
        Relabeler relabel(rs, inst.j_star, sigma);

        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < inst.k; ++i) {
            std::vector<std::pair<int, int>> mine;
            for (int j = 0; j < rs.t; ++j) {
                std::vector<uint8_t> xj =
                    (j == inst.j_star) ? inst.embedded.x : uniform_half_weight(r, rng);
                for (int idx = 0; idx < r; ++idx) {
                    if (!xj[idx]) continue;
                    auto [a, b] = rs.matchings[j].edges[idx];
                    int la = relabel(i, a), lb = relabel(i, b);
                    if (la > lb) std::swap(la, lb);
                    mine.emplace_back(la, lb);
                    all_edges.emplace_back(la, lb);
                }
            }
            // this player's clique family goes to the referee
            for (const auto& blk : inst.embedded.blocks) {
                for (std::size_t a = 0; a < blk.size(); ++a)
                    for (std::size_t b = a + 1; b < blk.size(); ++b) {
                        int la = relabel(i, mstar[blk[a]].second);
                        int lb = relabel(i, mstar[blk[b]].second);
                        if (la > lb) std::swap(la, lb);
                        inst.referee_edges.emplace_back(la, lb);
                        all_edges.emplace_back(la, lb);
                    }
            }
            inst.player_edges.push_back(std::move(mine));
        }
        inst.graph = Graph::from_pairs(inst.n, all_edges);

        long long kr = static_cast<long long>(inst.k) * r;
        inst.opt_yes_value = 3 * kr / 4;                            // opt is strictly above this
        inst.opt_no_bound = 3 * kr / 4 - kr / (2 * inst.p) + N;
    }
    return inst;
}

bool GapBound::holds(long long measured) const {
    switch (op) {
        case Op::GE: return measured >= value;
        case Op::LE: return measured <= value;
        case Op::EQ: return measured == value;
    }
    return false;
}

std::string GapBound::to_string() const {
    const char* o = op == Op::GE ? ">=" : (op == Op::LE ? "<=" : "==");
    return std::string("opt ") + o + " " + std::to_string(value);
}

GapReport verify_gap(const Graph& g, const std::string& instance_id,
                     const std::vector<GapBound>& bounds, int max_vertices, long long max_edges) {
    if (g.n > max_vertices || static_cast<long long>(g.distinct_edges()) > max_edges)
        throw ResourceGuard("graph exceeds the exact-matcher budget");
    GapReport rep;
    rep.instance_id = instance_id;
    rep.bounds = bounds;
    rep.measured = max_matching(g).size;
    rep.pass = true;
    for (const auto& b : bounds) rep.pass = rep.pass && b.holds(rep.measured);
    return rep;
}

double tvd_experiment(int n, int c, int trials, uint64_t seed) {
    if (n < 2 || n > 16 || n % 2 != 0) throw ResourceGuard("tvd experiment needs even n <= 16");
    if (c < 1 || c > n) throw ParameterError("set size exponent c must be in [1, n]");
    if (trials < 1) throw ParameterError("trials must be >= 1");

    Rng rng = make_rng(child_seed(seed, 1));

    // A: 2^(n-c) distinct even-parity vectors, uniformly without replacement.
    // Even class enumerated by (n-1)-bit prefix plus its parity bit.
    std::size_t class_size = std::size_t(1) << (n - 1);
    std::size_t a_size = std::size_t(1) << (n - c);
    std::vector<uint32_t> cls(class_size);
    for (std::size_t w = 0; w < class_size; ++w) {
        uint32_t parity = static_cast<uint32_t>(__builtin_popcount(static_cast<unsigned>(w)) & 1);
        cls[w] = static_cast<uint32_t>(w) | (parity << (n - 1));
    }
    for (std::size_t i = 0; i < a_size; ++i) {
        std::size_t j = i + rand_below(rng, cls.size() - i);
        std::swap(cls[i], cls[j]);
    }
    cls.resize(a_size);

    int half = n / 2;
    uint32_t zmask = (half >= 32) ? 0xffffffffu : ((uint32_t(1) << half) - 1);
    std::vector<long long> count(std::size_t(1) << half);
    std::vector<int> verts(n);

    double total = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        std::iota(verts.begin(), verts.end(), 0);
        std::shuffle(verts.begin(), verts.end(), rng);
        std::fill(count.begin(), count.end(), 0);
        for (uint32_t x : cls) {
            uint32_t z = 0;
            for (int b = 0; b < half; ++b) {
                uint32_t bit = ((x >> verts[2 * b]) ^ (x >> verts[2 * b + 1])) & 1u;
                z |= bit << b;
            }
            ++count[z];
        }
        long long l1 = 0;
        for (std::size_t z = 0; z < count.size(); ++z)
            l1 += std::llabs(count[z] - count[static_cast<uint32_t>(z) ^ zmask]);
        total += 0.5 * static_cast<double>(l1) / static_cast<double>(a_size);
    }
    return total / trials;
}

}  // namespace mse
