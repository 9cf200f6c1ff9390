#pragma once

#include <cstdint>
#include <vector>

#include "mse/hashing.hpp"
#include "mse/stream.hpp"
#include "mse/testers.hpp"

namespace mse {

// ceil(log2(x)) for x >= 1; the "log n" unit used everywhere.
int ceil_log2(long long x);

struct EstimatorConfig {
    int n = 0;
    int alpha = 0;
    StreamMode mode = StreamMode::InsertionOnly;
    uint64_t seed = 0;

    int log_unit() const { return ceil_log2(n); }                     // L
    std::vector<int> beta_schedule() const;                           // {L, 2L, ..., alpha}
    long long t_small() const;                                        // ceil(L^2 / 2)
    long long t_big() const;                                          // ceil(n L^2 / alpha^2)
    int sqrt_n_ceil() const;
};

enum class Branch { AllFail, AllPass, Mixed, Fallback };

struct BetaVerdict {
    int beta = 0;
    TesterVerdict verdict;
};

struct EstimateReport {
    long long estimate = 0;
    Branch branch = Branch::AllFail;
    int beta_star = -1;  // smallest failing beta, set iff Mixed
    std::vector<BetaVerdict> per_beta;
    TesterVerdict extra;       // the alpha-run with threshold t_big
    bool extra_present = false;
    uint64_t seed = 0;
    std::size_t words_used = 0;
};

// Algorithm combining vertex-sampled tester instances across the beta
// schedule. Requires L <= alpha <= ceil(sqrt(n)); outside that, see
// fallback_small_alpha / estimate_stream.
EstimateReport meta_estimate(const EdgeStream& stream, const EstimatorConfig& cfg);

// alpha below the log unit: insertion mode keeps a full maximal matching
// (2-approximation); dynamic mode recovers the exact edge multiset and
// matches it exactly.
EstimateReport fallback_small_alpha(const EdgeStream& stream, const EstimatorConfig& cfg);

// Dispatcher: alpha < L -> fallback, L <= alpha <= ceil(sqrt(n)) -> meta,
// otherwise ConfigError.
EstimateReport estimate_stream(const EdgeStream& stream, const EstimatorConfig& cfg);

// One-pass filtered view: an event survives iff both endpoints pass the
// sampling predicate. materialize(collect()) equals the induced subgraph of
// the materialized base stream on the sampled vertices (original ids kept).
struct SampledStreamView {
    const EdgeStream* base = nullptr;
    SampleSpec spec;

    template <typename F>
    void for_each(F&& f) const {
        base->for_each([&](const StreamEvent& ev) {
            if (spec(static_cast<uint64_t>(ev.u)) && spec(static_cast<uint64_t>(ev.v))) f(ev);
        });
    }

    EdgeStream collect() const;
};

SampledStreamView sample_composition(const EdgeStream& stream, const SampleSpec& spec);

}  // namespace mse
