#include "mse/stream.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "mse/errors.hpp"
#include "mse/rng.hpp"

namespace mse {

namespace {
inline uint64_t pair_key(int u, int v) {
    return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
}
}  // namespace

void EdgeStream::push(EventKind kind, int u, int v) {
    if (u == v) throw ParameterError("self-loop event");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("event vertex out of range");
    if (kind == EventKind::Delete && mode == StreamMode::InsertionOnly)
        throw ParameterError("delete event in insertion-only stream");
    if (u > v) std::swap(u, v);
    events.push_back({kind, u, v});
}

bool EdgeStream::prefix_valid() const {
    std::unordered_map<uint64_t, long long> mult;
    for (const auto& ev : events) {
        if (ev.u == ev.v || ev.u < 0 || ev.v >= n) return false;
        if (ev.kind == EventKind::Insert) {
            ++mult[pair_key(ev.u, ev.v)];
        } else {
            if (mode == StreamMode::InsertionOnly) return false;
            if (--mult[pair_key(ev.u, ev.v)] < 0) return false;
        }
    }
    return true;
}

Graph materialize(const EdgeStream& s) {
    std::unordered_map<uint64_t, long long> mult;
    s.for_each([&](const StreamEvent& ev) {
        long long& m = mult[pair_key(ev.u, ev.v)];
        m += (ev.kind == EventKind::Insert) ? 1 : -1;
        if (m < 0) throw PrefixViolation("delete below multiplicity 0");
    });
    Graph g;
    g.n = s.n;
    for (const auto& [key, m] : mult) {
        if (m > 0)
            g.edges.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), m});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v); });
    return g;
}

EdgeStream stream_from_graph(const Graph& g, StreamOrder order, uint64_t seed) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : g.edges)
        for (long long i = 0; i < e.mult; ++i) pairs.emplace_back(e.u, e.v);

    switch (order) {
        case StreamOrder::Natural:
            break;
        case StreamOrder::Shuffled: {
            Rng rng = make_rng(seed);
            std::shuffle(pairs.begin(), pairs.end(), rng);
            break;
        }
        case StreamOrder::Adversarial: {
            // deliver edges touching high-degree vertices last
            std::vector<long long> deg(g.n, 0);
            for (const auto& e : g.edges) {
                deg[e.u] += e.mult;
                deg[e.v] += e.mult;
            }
            std::stable_sort(pairs.begin(), pairs.end(),
                             [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                                 return std::max(deg[a.first], deg[a.second]) <
                                        std::max(deg[b.first], deg[b.second]);
                             });
            break;
        }
    }

    EdgeStream s;
    s.n = g.n;
    s.mode = StreamMode::InsertionOnly;
    for (auto [u, v] : pairs) s.push(EventKind::Insert, u, v);
    return s;
}

EdgeStream churn_stream(const Graph& g, double churn_factor, uint64_t seed) {
    if (churn_factor < 0) throw ParameterError("churn_factor must be >= 0");
    if (churn_factor == 0) {
        EdgeStream s = stream_from_graph(g, StreamOrder::Shuffled, seed);
        s.mode = StreamMode::Dynamic;
        return s;
    }

    Rng rng = make_rng(seed);
    std::unordered_set<uint64_t> real;
    for (const auto& e : g.edges) real.insert(pair_key(e.u, e.v));

    long long want = static_cast<long long>(churn_factor * static_cast<double>(g.total_edges()));
    std::vector<std::pair<int, int>> decoys;
    std::unordered_set<uint64_t> used;
    long long possible = static_cast<long long>(g.n) * (g.n - 1) / 2 - static_cast<long long>(real.size());
    want = std::min(want, possible);
    while (static_cast<long long>(decoys.size()) < want) {
        int u = static_cast<int>(rand_below(rng, g.n));
        int v = static_cast<int>(rand_below(rng, g.n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        uint64_t key = pair_key(u, v);
        if (real.count(key) || used.count(key)) continue;  // resample collisions
        used.insert(key);
        decoys.emplace_back(u, v);
    }

    // interleave: real and decoy inserts shuffled together; a decoy delete may
    // only be emitted after its own insert, so deletes drain from the pool of
    // decoys inserted so far
    std::vector<std::pair<StreamEvent, bool>> inserts;  // event, is_decoy
    for (const auto& e : g.edges)
        for (long long i = 0; i < e.mult; ++i)
            inserts.push_back({{EventKind::Insert, e.u, e.v}, false});
    for (auto [u, v] : decoys) inserts.push_back({{EventKind::Insert, u, v}, true});
    std::shuffle(inserts.begin(), inserts.end(), rng);

    EdgeStream s;
    s.n = g.n;
    s.mode = StreamMode::Dynamic;
    std::vector<std::pair<int, int>> live;
    for (std::size_t i = 0; i < inserts.size(); ++i) {
        const auto& [ev, is_decoy] = inserts[i];
        s.events.push_back(ev);
        if (is_decoy) live.emplace_back(ev.u, ev.v);
        // start draining deletes once half the inserts have gone by
        if (2 * i >= inserts.size() && !live.empty()) {
            std::size_t pick = rand_below(rng, live.size());
            std::swap(live[pick], live.back());
            s.push(EventKind::Delete, live.back().first, live.back().second);
            live.pop_back();
        }
    }
    while (!live.empty()) {
        std::size_t pick = rand_below(rng, live.size());
        std::swap(live[pick], live.back());
        s.push(EventKind::Delete, live.back().first, live.back().second);
        live.pop_back();
    }
    return s;
}

}  // namespace mse
