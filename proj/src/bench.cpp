#include "mse/bench.hpp"

#include <cmath>

#include "mse/errors.hpp"
#include "mse/l0.hpp"
#include "mse/testers.hpp"

namespace mse {

SpaceReport space_audit(const InsertionTester& t, int n) {
    return {"insertion-tester", n, t.threshold(), 0, t.words_used(), t.words_budget()};
}

SpaceReport space_audit(const DynamicTester& t, int n) {
    return {"dynamic-tester", n, t.threshold(), 0, t.words_used(), t.words_budget()};
}

SpaceReport space_audit(const L0Estimator& est, int n) {
    return {"l0-estimator", n, static_cast<long long>(est.sketches.size()), 0, est.words_used(),
            est.words_used()};
}

SpaceReport insertion_space_point(long long k, uint64_t seed) {
    (void)seed;
    InsertionTester t(k);
    int n = static_cast<int>(4 * k + 8);  // path long enough to hit the cap
    for (int i = 0; i + 1 < n; ++i) {
        StreamEvent ev{EventKind::Insert, i, i + 1};
        t.absorb(ev);
    }
    return space_audit(t, n);
}

SpaceReport dynamic_space_point(long long k, uint64_t seed) {
    DynamicTester t(k, seed);
    int n = 4 * t.group_count();  // clique large enough to touch most group pairs
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            StreamEvent ev{EventKind::Insert, u, v};
            t.absorb(ev);
        }
    return space_audit(t, n);
}

std::vector<SpaceReport> tester_space_sweep(StreamMode mode, const std::vector<long long>& ks,
                                            uint64_t seed) {
    std::vector<SpaceReport> out;
    for (long long k : ks)
        out.push_back(mode == StreamMode::InsertionOnly ? insertion_space_point(k, seed)
                                                        : dynamic_space_point(k, seed));
    return out;
}

double loglog_slope(const std::vector<SpaceReport>& pts) {
    if (pts.size() < 2) throw ParameterError("slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : pts) {
        double x = std::log(static_cast<double>(p.k));
        double y = std::log(static_cast<double>(p.words_used));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(pts.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace mse
