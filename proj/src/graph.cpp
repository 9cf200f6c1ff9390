#include "mse/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "mse/errors.hpp"

namespace mse {

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g;
    g.n = n;
    std::vector<std::pair<int, int>> ps;
    ps.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v) throw ParameterError("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("vertex id out of range");
        if (u > v) std::swap(u, v);
        ps.emplace_back(u, v);
    }
    std::sort(ps.begin(), ps.end());
    for (std::size_t i = 0; i < ps.size();) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        g.edges.push_back({ps[i].first, ps[i].second, static_cast<long long>(j - i)});
        i = j;
    }
    return g;
}

long long Graph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& p) {
                                   return std::make_pair(e.u, e.v) < p;
                               });
    if (it != edges.end() && it->u == u && it->v == v) return it->mult;
    return 0;
}

long long Graph::total_edges() const {
    long long s = 0;
    for (const auto& e : edges) s += e.mult;
    return s;
}

bool Graph::valid() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u >= e.v) return false;  // covers self-loops and ordering
        if (e.u < 0 || e.v >= n) return false;
        if (e.mult <= 0) return false;
        if (i > 0 && std::make_pair(edges[i - 1].u, edges[i - 1].v) >= std::make_pair(e.u, e.v))
            return false;
    }
    return true;
}

bool Matching::is_matching() const {
    std::vector<int> vs;
    for (auto [u, v] : edges) {
        if (u == v) return false;
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool Matching::subset_of(const Graph& g) const {
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) return false;
    return true;
}

std::vector<int> Matching::vertices() const {
    std::vector<int> vs;
    vs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

Graph RsGraph::union_graph() const {
    std::vector<std::pair<int, int>> ps;
    for (const auto& m : matchings)
        for (auto e : m.edges) ps.push_back(e);
    return Graph::from_pairs(N, ps);
}

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

// Edmonds' blossom algorithm, contraction via base[] relabeling. One BFS
// per augmentation from each free vertex; greedy initialization cuts the
// number of augmenting phases on the inputs we care about.
struct BlossomMatcher {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, parent, base;
    std::vector<bool> used, in_blossom;

    BlossomMatcher(int n, const std::vector<std::vector<int>>& adj)
        : n(n), adj(adj), match(n, -1), parent(n, -1), base(n), used(n), in_blossom(n) {}

    int lca(int a, int b) {
        std::vector<bool> seen(n, false);
        a = base[a];
        while (true) {
            seen[a] = true;
            if (match[a] == -1) break;
            a = base[parent[match[a]]];
        }
        b = base[b];
        while (!seen[b]) b = base[parent[match[b]]];
        return b;
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        // greedy init
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (int to : adj[v]) {
                if (match[to] == -1) {
                    match[v] = to;
                    match[to] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                int pv = parent[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

}  // namespace

MatchingResult max_matching(const Graph& g) {
    auto adj = adjacency(g);
    BlossomMatcher bm(g.n, adj);
    bm.run();
    MatchingResult res;
    for (int v = 0; v < g.n; ++v) {
        if (bm.match[v] > v) res.witness.edges.emplace_back(v, bm.match[v]);
    }
    res.size = static_cast<int>(res.witness.edges.size());
    return res;
}

int brute_force_matching(const Graph& g) {
    if (g.n > 22) throw ResourceGuard("brute_force_matching: n > 22");
    int n = g.n;
    std::vector<unsigned> nbr(n, 0);
    for (const auto& e : g.edges) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
    }
    std::vector<int8_t> dp(std::size_t(1) << n, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int v = __builtin_ctz(mask);
        unsigned rest = mask & (mask - 1);  // v left unmatched
        int best = dp[rest];
        unsigned cands = nbr[v] & rest;
        while (cands) {
            int u = __builtin_ctz(cands);
            cands &= cands - 1;
            best = std::max(best, 1 + dp[rest & ~(1u << u)]);
        }
        dp[mask] = static_cast<int8_t>(best);
    }
    return dp[(std::size_t(1) << n) - 1];
}

int greedy_maximal_matching(const Graph& g) {
    std::vector<bool> matched(g.n, false);
    int m = 0;
    for (const auto& e : g.edges) {
        if (!matched[e.u] && !matched[e.v]) {
            matched[e.u] = matched[e.v] = true;
            ++m;
        }
    }
    return m;
}

bool is_induced_matching(const Graph& g, const Matching& m) {
    if (!m.is_matching()) return false;
    if (!m.subset_of(g)) return false;
    auto vs = m.vertices();
    std::vector<bool> in_m(g.n, false);
    for (int v : vs) in_m[v] = true;
    std::size_t inside = 0;
    for (const auto& e : g.edges) {
        if (in_m[e.u] && in_m[e.v]) ++inside;
    }
    // every g-edge inside V(m) must be one of m's edges
    return inside == m.edges.size();
}

bool validate_rs_graph(const RsGraph& rs) {
    if (rs.t != static_cast<int>(rs.matchings.size())) return false;
    std::vector<std::pair<int, int>> all;
    for (const auto& m : rs.matchings) {
        if (static_cast<int>(m.edges.size()) != rs.r) return false;
        if (!m.is_matching()) return false;
        for (auto [u, v] : m.edges) {
            if (u < 0 || v >= rs.N) return false;
            all.emplace_back(u, v);
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;  // edge-disjoint
    Graph u = rs.union_graph();
    for (const auto& m : rs.matchings)
        if (!is_induced_matching(u, m)) return false;
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
    assert(static_cast<int>(keep.size()) == g.n);
    InducedSubgraph out;
    out.from_original.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (keep[v]) {
            out.from_original[v] = static_cast<int>(out.to_original.size());
            out.to_original.push_back(v);
        }
    }
    out.graph.n = static_cast<int>(out.to_original.size());
    for (const auto& e : g.edges) {
        int u2 = out.from_original[e.u], v2 = out.from_original[e.v];
        if (u2 != -1 && v2 != -1) out.graph.edges.push_back({u2, v2, e.mult});
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::function<bool(int)>& keep) {
    std::vector<bool> k(g.n);
    for (int v = 0; v < g.n; ++v) k[v] = keep(v);
    return induced_subgraph(g, k);
}

}  // namespace mse
