#pragma once

#include <cstdint>
#include <vector>

namespace cds2m {

// A feasible 2-connected m-dominating node set plus run provenance.
struct Solution {
    std::vector<int> nodes;          // ascending
    long long iteration_found = 0;   // 1-based GRASP iteration, 0 = n/a
    double elapsed_ms = 0.0;         // wall time from run start
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(nodes.size()); }
};

} // namespace cds2m
