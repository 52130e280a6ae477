#pragma once

#include <vector>

#include "cds2m/graph.hpp"
#include "cds2m/nodemask.hpp"

namespace cds2m {

// View of the subgraph induced by a node subset. Members are normalized to
// ascending order so results never depend on input ordering.
class InducedView {
public:
    InducedView(const Graph& g, const std::vector<int>& members);
    InducedView(const Graph& g, NodeMask members);

    const Graph& base() const { return *g_; }
    const NodeMask& mask() const { return mask_; }
    const std::vector<int>& members() const { return members_; }
    bool contains(int u) const { return mask_.test(u); }
    int size() const { return static_cast<int>(members_.size()); }

private:
    const Graph* g_;
    NodeMask mask_;
    std::vector<int> members_;
};

// True iff the induced subgraph has >= 3 nodes, is connected, and has no
// articulation point. Iterative DFS, O(|members| + induced edges).
bool is_biconnected(const InducedView& view);

// Articulation points of a connected induced subgraph, ascending.
// Throws DisconnectedInput when the view is not connected.
std::vector<int> articulation_points(const InducedView& view);

} // namespace cds2m
