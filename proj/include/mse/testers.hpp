#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mse/hashing.hpp"
#include "mse/stream.hpp"

namespace mse {

// Contract of a gamma-matching-size tester: Yes when opt(G) >= k, No when
// opt(G) <= gamma*k; a No carries an estimate in [gamma*opt, opt].
struct TesterVerdict {
    bool yes = false;
    long long estimate = 0;  // meaningful iff !yes
};

// One-pass greedy maximal matching, capped at ceil(k/2) edges. gamma = 0.5
// deterministically (maximal matching is a 2-approximation).
class InsertionTester {
  public:
    explicit InsertionTester(long long k);

    void absorb(const StreamEvent& ev);
    TesterVerdict verdict() const;

    long long threshold() const { return k_; }
    long long matching_size() const { return static_cast<long long>(kept_.size()); }
    std::size_t words_used() const;
    std::size_t words_budget() const;

  private:
    long long k_;
    long long cap_;
    std::unordered_set<int> matched_;
    std::vector<std::pair<int, int>> kept_;
};

// Counts surviving edges per unordered pair of vertex groups (same-group
// edges are dropped; they cannot join the group matching). At end of stream
// the simple group graph is matched exactly; distinct groups hold distinct
// vertices so that matching lifts to one of G, giving m_grp <= opt(G) on
// every run.
class DynamicTester {
  public:
    // groups = group_factor * k, Yes iff m_grp >= ceil(k * gamma_num/gamma_den)
    static constexpr int kGroupFactor = 8;
    static constexpr long long kGammaNum = 1;
    static constexpr long long kGammaDen = 4;

    DynamicTester(long long k, uint64_t seed);

    void absorb(const StreamEvent& ev);
    TesterVerdict verdict() const;

    long long threshold() const { return k_; }
    // simple graph on groups with an edge per pair holding surviving edges
    Graph group_graph() const;
    long long group_matching_size() const;
    int group_count() const { return g_count_; }
    std::size_t words_used() const;
    std::size_t words_budget() const;

  private:
    long long k_;
    int g_count_;
    GroupAssign grouping_;
    std::unordered_map<uint64_t, long long> counters_;
};

// Threshold the dynamic tester actually applies: ceil(k/4) with the
// calibrated gamma_dyn = 1/4.
long long dynamic_yes_threshold(long long k);

// Whole-stream drivers.
TesterVerdict insertion_tester(const EdgeStream& stream, long long k);
TesterVerdict dynamic_tester(const EdgeStream& stream, long long k, uint64_t seed);

}  // namespace mse
