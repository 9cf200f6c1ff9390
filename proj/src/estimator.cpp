#include "mse/estimator.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "mse/errors.hpp"
#include "mse/graph.hpp"
#include "mse/rng.hpp"

namespace mse {

int ceil_log2(long long x) {
    if (x < 1) throw ParameterError("ceil_log2: x must be >= 1");
    int l = 0;
    long long v = 1;
    while (v < x) {
        v <<= 1;
        ++l;
    }
    return l;
}

std::vector<int> EstimatorConfig::beta_schedule() const {
    int L = log_unit();
    std::vector<int> betas;
    for (long long b = L; b < alpha; b *= 2) betas.push_back(static_cast<int>(b));
    betas.push_back(alpha);  // the schedule always ends at alpha
    return betas;
}

long long EstimatorConfig::t_small() const {
    long long L = log_unit();
    return (L * L + 1) / 2;
}

long long EstimatorConfig::t_big() const {
    long long L = log_unit();
    long long a2 = static_cast<long long>(alpha) * alpha;
    return (static_cast<long long>(n) * L * L + a2 - 1) / a2;
}

int EstimatorConfig::sqrt_n_ceil() const {
    int s = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (static_cast<long long>(s) * s < n) ++s;
    while (s > 1 && static_cast<long long>(s - 1) * (s - 1) >= n) --s;
    return s;
}

namespace {

// A tester instance of either flavor behind one interface.
struct AnyTester {
    std::unique_ptr<InsertionTester> ins;
    std::unique_ptr<DynamicTester> dyn;

    static AnyTester make(StreamMode mode, long long k, uint64_t seed) {
        AnyTester t;
        if (mode == StreamMode::InsertionOnly)
            t.ins = std::make_unique<InsertionTester>(k);
        else
            t.dyn = std::make_unique<DynamicTester>(k, seed);
        return t;
    }
    void absorb(const StreamEvent& ev) { ins ? ins->absorb(ev) : dyn->absorb(ev); }
    TesterVerdict verdict() const { return ins ? ins->verdict() : dyn->verdict(); }
    std::size_t words_used() const { return ins ? ins->words_used() : dyn->words_used(); }
};

long long gamma_times(StreamMode mode, long long k) {
    if (mode == StreamMode::InsertionOnly) return k / 2;  // gamma = 0.5
    return k * DynamicTester::kGammaNum / DynamicTester::kGammaDen;
}

}  // namespace

EstimateReport meta_estimate(const EdgeStream& stream, const EstimatorConfig& cfg) {
    if (cfg.n < 2) throw ConfigError("universe must have at least 2 vertices");
    if (cfg.n != stream.n) throw ConfigError("config n does not match stream n");
    if (cfg.mode == StreamMode::InsertionOnly && stream.mode != StreamMode::InsertionOnly)
        throw ConfigError("insertion config on a dynamic stream");
    int L = cfg.log_unit();
    if (cfg.alpha < L || cfg.alpha > cfg.sqrt_n_ceil())
        throw ConfigError("meta path requires L <= alpha <= ceil(sqrt(n))");

    auto betas = cfg.beta_schedule();
    std::size_t nb = betas.size();

    std::vector<SampleSpec> specs;
    std::vector<AnyTester> testers;
    specs.reserve(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        double p = std::min(1.0, static_cast<double>(L) / betas[i]);
        if (betas[i] <= L) p = 1.0;  // G^L is literally G
        specs.push_back(sample_predicate(p, child_seed(cfg.seed, 2 * i)));
        testers.push_back(AnyTester::make(cfg.mode, cfg.t_small(), child_seed(cfg.seed, 2 * i + 1)));
    }
    // the extra alpha-run shares G^alpha (the last sample) with its beta tester
    AnyTester extra = AnyTester::make(cfg.mode, cfg.t_big(), child_seed(cfg.seed, 2 * nb + 1));

    stream.for_each([&](const StreamEvent& ev) {
        for (std::size_t i = 0; i < nb; ++i) {
            if (specs[i](static_cast<uint64_t>(ev.u)) && specs[i](static_cast<uint64_t>(ev.v))) {
                testers[i].absorb(ev);
                if (i + 1 == nb) extra.absorb(ev);
            }
        }
    });

    EstimateReport rep;
    rep.seed = cfg.seed;
    rep.extra = extra.verdict();
    rep.extra_present = true;
    bool all_pass = true, all_fail = true;
    int beta_star = -1;
    for (std::size_t i = 0; i < nb; ++i) {
        TesterVerdict v = testers[i].verdict();
        rep.per_beta.push_back({betas[i], v});
        if (v.yes)
            all_fail = false;
        else {
            all_pass = false;
            if (beta_star < 0) beta_star = betas[i];  // betas are increasing
        }
        rep.words_used += testers[i].words_used() + specs[i].words_used();
    }
    rep.words_used += extra.words_used();

    if (all_fail) {
        rep.branch = Branch::AllFail;
        rep.estimate = rep.per_beta.front().verdict.estimate;  // beta = L sees G itself
    } else if (all_pass) {
        rep.branch = Branch::AllPass;
        long long opt_hat =
            rep.extra.yes ? gamma_times(cfg.mode, cfg.t_big()) : rep.extra.estimate;
        long long scaled = static_cast<long long>(cfg.alpha) * opt_hat / (static_cast<long long>(L) * L);
        rep.estimate = std::max<long long>(cfg.alpha, scaled);
    } else {
        rep.branch = Branch::Mixed;
        rep.beta_star = beta_star;
        // beta_star is the minimum failing beta by construction
        for (const auto& bv : rep.per_beta)
            if (!bv.verdict.yes) assert(bv.beta >= beta_star);
        rep.estimate = beta_star / 2;
    }
    return rep;
}

EstimateReport fallback_small_alpha(const EdgeStream& stream, const EstimatorConfig& cfg) {
    EstimateReport rep;
    rep.seed = cfg.seed;
    rep.branch = Branch::Fallback;
    if (cfg.mode == StreamMode::InsertionOnly) {
        if (stream.mode != StreamMode::InsertionOnly)
            throw ConfigError("insertion fallback on a dynamic stream");
        // uncapped maximal matching: 2-approximation in O(n) words
        InsertionTester t(2 * static_cast<long long>(cfg.n) + 2);  // cap beyond any matching
        stream.for_each([&](const StreamEvent& ev) { t.absorb(ev); });
        rep.estimate = t.matching_size();
        rep.words_used = t.words_used();
    } else {
        // full recovery: one counter per touched edge slot, then exact matching
        std::unordered_map<uint64_t, long long> mult;
        stream.for_each([&](const StreamEvent& ev) {
            uint64_t key = (static_cast<uint64_t>(ev.u) << 32) | static_cast<uint32_t>(ev.v);
            long long& c = mult[key];
            c += (ev.kind == EventKind::Insert) ? 1 : -1;
            if (c < 0) throw PrefixViolation("delete below multiplicity 0");
        });
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [key, c] : mult)
            if (c > 0) pairs.emplace_back(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
        Graph g = Graph::from_pairs(cfg.n, pairs);
        rep.estimate = max_matching(g).size;
        rep.words_used = 3 * mult.size();
    }
    return rep;
}

EstimateReport estimate_stream(const EdgeStream& stream, const EstimatorConfig& cfg) {
    if (cfg.n < 2) throw ConfigError("universe must have at least 2 vertices");
    if (cfg.alpha < 1) throw ConfigError("alpha must be >= 1");
    int L = cfg.log_unit();
    if (cfg.alpha < L) return fallback_small_alpha(stream, cfg);
    if (cfg.alpha > cfg.sqrt_n_ceil()) throw ConfigError("alpha above ceil(sqrt(n))");
    return meta_estimate(stream, cfg);
}

EdgeStream SampledStreamView::collect() const {
    EdgeStream out;
    out.n = base->n;
    out.mode = base->mode;
    for_each([&](const StreamEvent& ev) { out.events.push_back(ev); });
    return out;
}

SampledStreamView sample_composition(const EdgeStream& stream, const SampleSpec& spec) {
    return SampledStreamView{&stream, spec};
}

}  // namespace mse
