#include <doctest.h>

#include <algorithm>

#include "mse/errors.hpp"
#include "mse/graph.hpp"
#include "mse/rng.hpp"

using namespace mse;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> pairs;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) pairs.emplace_back(u, v);
    return Graph::from_pairs(n, pairs);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::from_pairs(n, pairs);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return Graph::from_pairs(n, pairs);
}

}  // namespace

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_matching(Graph::from_pairs(0, {})) == 0);
    CHECK(brute_force_matching(Graph::from_pairs(2, {{0, 1}})) == 1);
    CHECK(brute_force_matching(complete_graph(5)) == 2);
    CHECK_THROWS_AS(brute_force_matching(complete_graph(23)), ResourceGuard);
}

TEST_CASE("max matching on small fixtures") {
    CHECK(max_matching(path_graph(4)).size == 2);
    CHECK(max_matching(complete_graph(3)).size == 1);
    CHECK(max_matching(Graph::from_pairs(1, {})).size == 0);
    // odd cycle forces a blossom
    Graph c5 = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(max_matching(c5).size == 2);
    // petersen graph has a perfect matching
    Graph petersen = Graph::from_pairs(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(max_matching(petersen).size == 5);
}

TEST_CASE("max matching equals brute force on 500 random graphs") {
    Rng rng = make_rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rand_below(rng, 13));  // n <= 14
        Graph g = random_graph(n, 0.3, rng);
        auto res = max_matching(g);
        CHECK(res.size == brute_force_matching(g));
        CHECK(res.witness.is_matching());
        CHECK(res.witness.subset_of(g));
        CHECK(static_cast<int>(res.witness.size()) == res.size);
    }
}

TEST_CASE("greedy maximal matching brackets opt") {
    Rng rng = make_rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rand_below(rng, 11));
        Graph g = random_graph(n, 0.4, rng);
        int opt = max_matching(g).size;
        int greedy = greedy_maximal_matching(g);
        CHECK(greedy <= opt);
        CHECK(2 * greedy >= opt);
    }
}

TEST_CASE("induced matching checks") {
    // three disjoint edges
    Graph g3 = Graph::from_pairs(6, {{0, 1}, {2, 3}, {4, 5}});
    Matching m3{{{0, 1}, {2, 3}, {4, 5}}};
    CHECK(is_induced_matching(g3, m3));

    Graph k4 = complete_graph(4);
    Matching mk{{{0, 1}, {2, 3}}};
    CHECK_FALSE(is_induced_matching(k4, mk));  // edge (0,2) breaks inducedness

    Graph c6 = Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(is_induced_matching(c6, Matching{{{0, 1}, {3, 4}}}));
    CHECK_FALSE(is_induced_matching(c6, Matching{{{0, 1}, {2, 3}}}));  // edge (1,2) inside
    // not vertex-disjoint
    CHECK_FALSE(is_induced_matching(c6, Matching{{{0, 1}, {1, 2}}}));
}

TEST_CASE("rs graph validation") {
    // a single perfect matching is an (r,1)-RS graph
    RsGraph one;
    one.N = 6;
    one.r = 3;
    one.t = 1;
    one.matchings.push_back(Matching{{{0, 1}, {2, 3}, {4, 5}}});
    CHECK(validate_rs_graph(one));

    // K4 split into three perfect matchings: none is induced
    RsGraph k4;
    k4.N = 4;
    k4.r = 2;
    k4.t = 3;
    k4.matchings.push_back(Matching{{{0, 1}, {2, 3}}});
    k4.matchings.push_back(Matching{{{0, 2}, {1, 3}}});
    k4.matchings.push_back(Matching{{{0, 3}, {1, 2}}});
    CHECK_FALSE(validate_rs_graph(k4));

    // duplicated edge across matchings is rejected
    RsGraph dup = one;
    dup.t = 2;
    dup.matchings.push_back(Matching{{{0, 1}, {2, 3}, {4, 5}}});
    CHECK_FALSE(validate_rs_graph(dup));
}

TEST_CASE("induced subgraph") {
    Graph k4 = complete_graph(4);
    SUBCASE("keep all is the identity") {
        auto sub = induced_subgraph(k4, std::vector<bool>(4, true));
        CHECK(sub.graph.n == 4);
        CHECK(sub.graph.distinct_edges() == 6);
        CHECK(max_matching(sub.graph).size == max_matching(k4).size);
    }
    SUBCASE("keep none is empty") {
        auto sub = induced_subgraph(k4, std::vector<bool>(4, false));
        CHECK(sub.graph.n == 0);
        CHECK(sub.graph.distinct_edges() == 0);
    }
    SUBCASE("K4 keeping three vertices is a triangle") {
        auto sub = induced_subgraph(k4, std::vector<bool>{true, true, true, false});
        CHECK(sub.graph.n == 3);
        CHECK(sub.graph.distinct_edges() == 3);
        CHECK(max_matching(sub.graph).size == 1);
    }
    SUBCASE("relabeling map round-trips") {
        Graph g = Graph::from_pairs(5, {{0, 2}, {2, 4}, {1, 3}});
        auto sub = induced_subgraph(g, std::vector<bool>{true, false, true, false, true});
        CHECK(sub.graph.n == 3);
        REQUIRE(sub.graph.distinct_edges() == 2);
        for (const auto& e : sub.graph.edges) {
            int ou = sub.to_original[e.u], ov = sub.to_original[e.v];
            CHECK(g.has_edge(ou, ov));
            CHECK(sub.from_original[ou] == e.u);
        }
    }
    SUBCASE("never increases matching size") {
        Rng rng = make_rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = random_graph(10, 0.4, rng);
            std::vector<bool> keep(10);
            for (int v = 0; v < 10; ++v) keep[v] = rand_below(rng, 2) == 0;
            auto sub = induced_subgraph(g, keep);
            CHECK(max_matching(sub.graph).size <= max_matching(g).size);
        }
    }
}

TEST_CASE("multigraph bookkeeping") {
    Graph g = Graph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.valid());
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.total_edges() == 3);
    CHECK(g.distinct_edges() == 2);
    CHECK(max_matching(g).size == 1);  // multiplicities collapse
    CHECK_THROWS_AS(Graph::from_pairs(3, {{1, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph::from_pairs(3, {{0, 3}}), ParameterError);
}
