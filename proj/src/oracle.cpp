#include "cds2m/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "cds2m/biconnect.hpp"
#include "cds2m/errors.hpp"

namespace cds2m {

std::string Feasibility::describe() const {
    switch (reason) {
        case FailureReason::None: return "feasible";
        case FailureReason::TooSmall: return "fewer than 3 nodes";
        case FailureReason::NotConnected: return "induced subgraph not connected";
        case FailureReason::HasArticulationPoint: return "induced subgraph has an articulation point";
        case FailureReason::UnderDominated:
            return "node " + std::to_string(offending_node) + " lacks dominators";
    }
    return "?";
}

Feasibility verify(const Graph& g, const std::vector<int>& s, int m) {
    InducedView view(g, s);
    Feasibility f;
    if (view.size() < 3) {
        f.reason = FailureReason::TooSmall;
        return f;
    }

    // Connectivity via a plain BFS over the induced subgraph.
    std::vector<int> stack{view.members().front()};
    NodeMask reached(g.node_count());
    reached.set(stack.front());
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!view.contains(w) || reached.test(w)) continue;
            reached.set(w);
            ++count;
            stack.push_back(w);
        }
    }
    if (count != view.size()) {
        f.reason = FailureReason::NotConnected;
        return f;
    }
    if (!articulation_points(view).empty()) {
        f.reason = FailureReason::HasArticulationPoint;
        return f;
    }
    for (int v = 0; v < g.node_count(); ++v) {
        if (view.contains(v)) continue;
        if (g.neighbor_mask(v).intersect_count(view.mask()) < m) {
            f.reason = FailureReason::UnderDominated;
            f.offending_node = v;
            return f;
        }
    }
    f.is_feasible = true;
    return f;
}

std::optional<Solution> exact_minimum(const Graph& g, int m, int node_limit) {
    const int n = g.node_count();
    if (n > node_limit)
        throw TooLarge("exact_minimum: " + std::to_string(n) + " nodes exceeds limit " +
                       std::to_string(node_limit));

    // Nodes that cannot be m-dominated from outside must be inside.
    std::vector<int> forced;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < m) forced.push_back(v);

    std::vector<int> comb;
    for (int k = 3; k <= n; ++k) {
        if (k < static_cast<int>(forced.size())) continue;
        comb.resize(static_cast<size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
            if (std::includes(comb.begin(), comb.end(), forced.begin(), forced.end())) {
                const Feasibility f = verify(g, comb, m);
                if (f.is_feasible) {
                    Solution sol;
                    sol.nodes = comb;
                    return sol;
                }
            }
            int i = k - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

} // namespace cds2m
