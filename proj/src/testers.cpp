#include "mse/testers.hpp"

#include <algorithm>

#include "mse/errors.hpp"

namespace mse {

InsertionTester::InsertionTester(long long k) : k_(k), cap_((k + 1) / 2) {
    if (k < 1) throw ParameterError("tester threshold k must be >= 1");
}

void InsertionTester::absorb(const StreamEvent& ev) {
    if (ev.kind == EventKind::Delete)
        throw ParameterError("insertion tester fed a delete event");
    if (static_cast<long long>(kept_.size()) >= cap_) return;  // saturated
    if (matched_.count(ev.u) || matched_.count(ev.v)) return;
    matched_.insert(ev.u);
    matched_.insert(ev.v);
    kept_.emplace_back(ev.u, ev.v);
}

TesterVerdict InsertionTester::verdict() const {
    long long m = static_cast<long long>(kept_.size());
    if (m >= cap_) return {true, 0};
    return {false, m};
}

std::size_t InsertionTester::words_used() const {
    return matched_.size() + 2 * kept_.size() + 2;  // ids, edge slots, k/cap
}

std::size_t InsertionTester::words_budget() const {
    return 4 * static_cast<std::size_t>(cap_) + 2;
}

DynamicTester::DynamicTester(long long k, uint64_t seed)
    : k_(k),
      g_count_(static_cast<int>(kGroupFactor * k)),
      grouping_(group_assign(static_cast<int>(kGroupFactor * k), seed)) {
    if (k < 1) throw ParameterError("tester threshold k must be >= 1");
}

void DynamicTester::absorb(const StreamEvent& ev) {
    int a = grouping_(static_cast<uint64_t>(ev.u));
    int b = grouping_(static_cast<uint64_t>(ev.v));
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
    long long& c = counters_[key];
    c += (ev.kind == EventKind::Insert) ? 1 : -1;
    if (c < 0) throw PrefixViolation("group counter underflow");
}

Graph DynamicTester::group_graph() const {
    Graph grp;
    grp.n = g_count_;
    for (const auto& [key, c] : counters_) {
        if (c > 0)
            grp.edges.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), 1});
    }
    std::sort(grp.edges.begin(), grp.edges.end(), [](const Edge& a, const Edge& b) {
        return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
    });
    return grp;
}

long long DynamicTester::group_matching_size() const { return max_matching(group_graph()).size; }

long long dynamic_yes_threshold(long long k) {
    return (k * DynamicTester::kGammaNum + DynamicTester::kGammaDen - 1) / DynamicTester::kGammaDen;
}

TesterVerdict DynamicTester::verdict() const {
    long long m_grp = group_matching_size();
    if (m_grp >= dynamic_yes_threshold(k_)) return {true, 0};
    return {false, m_grp};
}

std::size_t DynamicTester::words_used() const {
    return 3 * counters_.size() + grouping_.words_used() + 2;
}

std::size_t DynamicTester::words_budget() const {
    // dense bound: one counter per unordered group pair
    std::size_t g = static_cast<std::size_t>(g_count_);
    return 3 * (g * (g - 1) / 2) + grouping_.words_used() + 2;
}

TesterVerdict insertion_tester(const EdgeStream& stream, long long k) {
    if (stream.mode != StreamMode::InsertionOnly)
        throw ParameterError("insertion tester requires an insertion-only stream");
    InsertionTester t(k);
    stream.for_each([&](const StreamEvent& ev) { t.absorb(ev); });
    return t.verdict();
}

TesterVerdict dynamic_tester(const EdgeStream& stream, long long k, uint64_t seed) {
    DynamicTester t(k, seed);
    stream.for_each([&](const StreamEvent& ev) { t.absorb(ev); });
    return t.verdict();
}

}  // namespace mse
