#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cds2m/graph.hpp"
#include "cds2m/solution.hpp"

namespace cds2m {

enum class FailureReason { None, TooSmall, NotConnected, HasArticulationPoint, UnderDominated };

struct Feasibility {
    bool is_feasible = false;
    FailureReason reason = FailureReason::None;
    int offending_node = -1; // the under-dominated node, when applicable

    std::string describe() const;
};

// Independent feasibility check: |S| >= 3, the induced subgraph is
// 2-connected, and every outside node has at least m neighbors in S.
// Shares no code with the construction path (only the articulation scan).
Feasibility verify(const Graph& g, const std::vector<int>& s, int m);

// Exhaustive minimization for desk-size graphs: subsets are enumerated by
// ascending cardinality (from 3) in lexicographic order and the first
// feasible one wins. Nodes of degree < m can never be dominated from
// outside, so subsets omitting one are skipped. Throws TooLarge when
// g.node_count() > node_limit.
std::optional<Solution> exact_minimum(const Graph& g, int m, int node_limit = 16);

} // namespace cds2m
