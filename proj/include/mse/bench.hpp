#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mse/stream.hpp"

namespace mse {

// Machine-word accounting of an algorithm's declared state. words_used is the
// live count at stream end (an empty stream costs fixed overhead only);
// words_budget is the worst-case dense bound the algorithm is honest about.
struct SpaceReport {
    std::string algorithm;
    int n = 0;
    long long k = 0;
    int alpha = 0;
    std::size_t words_used = 0;
    std::size_t words_budget = 0;
};

class InsertionTester;
class DynamicTester;
struct L0Estimator;

// Deterministic word counts of live declared state at stream end.
SpaceReport space_audit(const InsertionTester& t, int n);
SpaceReport space_audit(const DynamicTester& t, int n);
SpaceReport space_audit(const L0Estimator& est, int n);

// Tester sweeps under saturating streams (a long path for the insertion
// tester, a clique on 4x the group count for the dynamic one), so the live
// state reaches its k-scaling regime.
SpaceReport insertion_space_point(long long k, uint64_t seed);
SpaceReport dynamic_space_point(long long k, uint64_t seed);

std::vector<SpaceReport> tester_space_sweep(StreamMode mode, const std::vector<long long>& ks,
                                            uint64_t seed);

// Least-squares slope of log(words) against log(k).
double loglog_slope(const std::vector<SpaceReport>& pts);

}  // namespace mse
