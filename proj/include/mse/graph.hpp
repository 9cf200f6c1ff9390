#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace mse {

// Undirected edge with multiplicity; canonical form keeps u < v.
struct Edge {
    int u = 0;
    int v = 0;
    long long mult = 1;
};

// Simple/multigraph on vertex ids [0, n). Edges are canonicalized (u < v),
// sorted and unique per pair; multiplicities are strictly positive.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    long long multiplicity(int u, int v) const;
    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
    std::size_t distinct_edges() const { return edges.size(); }
    long long total_edges() const;
    bool valid() const;
};

struct Matching {
    std::vector<std::pair<int, int>> edges;  // canonical u < v

    std::size_t size() const { return edges.size(); }
    bool is_matching() const;                 // pairwise vertex-disjoint
    bool subset_of(const Graph& g) const;     // every edge present in g
    std::vector<int> vertices() const;        // sorted matched vertex ids
};

// Edge set given as t pairwise edge-disjoint induced matchings of size r each.
struct RsGraph {
    int N = 0;
    int r = 0;
    int t = 0;
    std::vector<Matching> matchings;

    Graph union_graph() const;
};

struct MatchingResult {
    int size = 0;
    Matching witness;
};

// Exact maximum matching (general graphs, blossom contraction). Multiplicities
// are ignored; the witness is a maximum-cardinality matching of g.
MatchingResult max_matching(const Graph& g);

// Independent exact oracle: bitmask dynamic programming over vertex subsets.
// Rejects n > 22 (ResourceGuard).
int brute_force_matching(const Graph& g);

// Greedy maximal matching over edges in the graph's canonical order.
// Size is within [opt/2, opt].
int greedy_maximal_matching(const Graph& g);

// True iff m is a matching and the subgraph of g induced on V(m) contains
// exactly the edges of m.
bool is_induced_matching(const Graph& g, const Matching& m);

bool validate_rs_graph(const RsGraph& rs);

// Subgraph on kept vertices, relabeled contiguously. to_original[new] = old;
// from_original[old] = new id or -1.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;
    std::vector<int> from_original;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);
InducedSubgraph induced_subgraph(const Graph& g, const std::function<bool(int)>& keep);

}  // namespace mse
