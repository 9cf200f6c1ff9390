#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

enum class EventKind { Insert, Delete };

struct StreamEvent {
    EventKind kind = EventKind::Insert;
    int u = 0;
    int v = 0;  // canonical u < v
};

enum class StreamMode { InsertionOnly, Dynamic };

// Ordered edge events over universe [0, n). All estimators consume streams
// one event at a time, in order, through for_each; nothing offers random
// access. Tests may replay a stream by calling for_each again.
struct EdgeStream {
    int n = 0;
    StreamMode mode = StreamMode::InsertionOnly;
    std::vector<StreamEvent> events;

    void push(EventKind kind, int u, int v);
    std::size_t size() const { return events.size(); }

    template <typename F>
    void for_each(F&& f) const {
        for (const auto& ev : events) f(ev);
    }

    // Checks mode discipline and that no delete underflows a multiplicity.
    bool prefix_valid() const;
};

// Multigraph of surviving edges. Throws PrefixViolation on underflow.
Graph materialize(const EdgeStream& s);

enum class StreamOrder { Natural, Shuffled, Adversarial };

// Insertion-only stream with materialization equal to g. Natural follows the
// canonical edge order; Shuffled permutes by seed; Adversarial sorts edges so
// that high-degree vertices arrive last.
EdgeStream stream_from_graph(const Graph& g, StreamOrder order, uint64_t seed = 0);

// Dynamic stream: inserts churn_factor * |E(g)| decoy non-edges of g and later
// deletes all of them, interleaved with g's insertions; materializes to g.
EdgeStream churn_stream(const Graph& g, double churn_factor, uint64_t seed);

}  // namespace mse
