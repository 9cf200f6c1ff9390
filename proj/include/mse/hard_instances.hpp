#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

enum class Label { Yes, No };

// Boolean hidden hypermatching seed instance: a weight-n/2 vector x and a
// perfect t-hypermatching (partition of [n] into n/t blocks of size t).
// Yes: every block XORs to 0; No: every block XORs to 1.
struct BhhInstance {
    int n = 0;
    int arity = 0;  // the hypermatching parameter t
    std::vector<uint8_t> x;
    std::vector<std::vector<int>> blocks;
    Label label = Label::Yes;

    bool valid() const;
};

BhhInstance gen_bhh0(int n, int arity, Label label, uint64_t seed);

// Reduction graph on 2n vertices: V = [0,n) degree-one side, W = [n,2n);
// edge (v_i, w_i) per x_i = 1 and a clique on {w_i : i in e} per hyperedge.
// For even arity: Yes gives opt = 3n/4, No gives opt = 3n/4 - n/2t.
Graph bhh_to_matching_graph(const BhhInstance& inst);

// Randomized greedy with restarts; best effort at desk scale. Accepts a
// candidate matching only if it stays edge-disjoint and keeps every matching
// induced in the growing union.
std::optional<RsGraph> build_rs_graph(int N, int r, int t, uint64_t seed, int restarts = 200);

// k players, each holding a matching; relabeling through sigma makes the
// 1-side vertices shared across players and the 0-side vertices private.
struct SmsInstance {
    int n = 0;
    int k = 0;
    std::vector<Label> profile;
    std::vector<int> sigma;                    // permutation of [n + n/k]
    std::vector<Matching> player_matchings;    // over the relabeled universe
    Graph graph;                               // union multigraph, n + n/k vertices
};

SmsInstance gen_sms(int n, int k, const std::vector<Label>& profile, uint64_t seed);

// Per-player RS copies with whole matchings kept/removed by x^(i), the
// j*-matching forced to theta for every player and relabeled onto private
// vertices. theta=1: opt >= (alpha+1)N; theta=0: opt <= N.
struct DenseAlphaInstance {
    int N = 0, r = 0, t = 0;
    int alpha = 0;
    int k = 0;       // (alpha+1) N / r players
    int n = 0;       // N + 2kr final vertices
    int theta = 0;
    int j_star = 0;
    std::vector<std::vector<uint8_t>> x;  // per player, over [t]
    std::vector<std::vector<std::pair<int, int>>> player_edges;
    Graph graph;  // union multigraph
};

DenseAlphaInstance gen_dense_alpha(const RsGraph& rs, int alpha, int theta, uint64_t seed);

enum class EpsVariant { InsertionOnly, Dynamic };

// (1+eps) hardness instances built around an embedded BHH0(r, p) instance on
// the j*-th induced matching.
struct EpsInstance {
    EpsVariant variant = EpsVariant::InsertionOnly;
    int N = 0, r = 0, t = 0;
    double eps = 0.0;
    double c_rs() const { return static_cast<double>(r) / N; }
    int p = 0;  // hyperedge arity
    int j_star = 0;
    Label label = Label::Yes;
    BhhInstance embedded;  // over [r] edge indices of matching j*
    int n = 0;             // final vertex count

    // insertion variant: two parties
    std::vector<std::pair<int, int>> alice_edges;
    std::vector<std::pair<int, int>> bob_edges;
    // dynamic variant: k players plus referee
    int k = 0;
    std::vector<std::vector<std::pair<int, int>>> player_edges;
    std::vector<std::pair<int, int>> referee_edges;

    Graph graph;

    // promised matching-size bounds
    long long opt_yes_value = 0;  // exact when label == Yes
    long long opt_no_bound = 0;   // upper bound when label == No
};

EpsInstance gen_eps_instance(EpsVariant variant, const RsGraph& rs, double eps, Label label,
                             uint64_t seed);

struct GapBound {
    enum class Op { GE, LE, EQ };
    Op op = Op::EQ;
    long long value = 0;

    bool holds(long long measured) const;
    std::string to_string() const;
};

struct GapReport {
    std::string instance_id;
    std::vector<GapBound> bounds;
    long long measured = 0;
    bool pass = false;
};

// Runs the exact matcher against the promised bounds. ResourceGuard above the
// stated budget.
GapReport verify_gap(const Graph& g, const std::string& instance_id,
                     const std::vector<GapBound>& bounds, int max_vertices = 20000,
                     long long max_edges = 2000000);

// Mean total variation distance between Mx and its complement for x uniform
// over a random even-parity set A of size 2^(n-c), averaged over `trials`
// random perfect matchings (arity 2). Exact enumeration; n <= 16.
double tvd_experiment(int n, int c, int trials, uint64_t seed);

}  // namespace mse
