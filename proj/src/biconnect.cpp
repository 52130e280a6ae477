#include "cds2m/biconnect.hpp"

#include <algorithm>

#include "cds2m/errors.hpp"

namespace cds2m {

InducedView::InducedView(const Graph& g, const std::vector<int>& members)
    : g_(&g), mask_(g.node_count()) {
    for (int v : members) {
        if (v < 0 || v >= g.node_count())
            throw Error("induced view: node " + std::to_string(v) + " out of range");
        mask_.set(v);
    }
    members_ = mask_.to_vector();
}

InducedView::InducedView(const Graph& g, NodeMask members)
    : g_(&g), mask_(std::move(members)), members_(mask_.to_vector()) {}

namespace {

struct ApScan {
    bool connected = true;
    std::vector<int> articulation; // ascending
};

// One DFS pass from the lowest member; explicit stack so deep graphs never
// exhaust the call stack.
ApScan articulation_scan(const InducedView& view) {
    ApScan res;
    const auto& members = view.members();
    if (members.size() <= 1) return res;

    const Graph& g = view.base();
    const int n = g.node_count();
    std::vector<int> disc(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), -1);
    std::vector<char> is_ap(static_cast<size_t>(n), 0);

    struct Frame {
        int node;
        int parent;
        size_t idx;
    };
    std::vector<Frame> stack;
    stack.reserve(members.size());

    const int start = members.front();
    int timer = 0;
    int visited = 1;
    int root_children = 0;
    disc[static_cast<size_t>(start)] = low[static_cast<size_t>(start)] = timer++;
    stack.push_back({start, -1, 0});

    while (!stack.empty()) {
        const int node = stack.back().node;
        const int parent = stack.back().parent;
        const auto& adj = g.neighbors(node);
        bool descended = false;
        while (stack.back().idx < adj.size()) {
            const int u = adj[stack.back().idx++];
            if (!view.contains(u)) continue;
            if (disc[static_cast<size_t>(u)] == -1) {
                disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
                ++visited;
                if (node == start) ++root_children;
                stack.push_back({u, node, 0});
                descended = true;
                break;
            }
            if (u != parent)
                low[static_cast<size_t>(node)] =
                    std::min(low[static_cast<size_t>(node)], disc[static_cast<size_t>(u)]);
        }
        if (descended) continue;
        stack.pop_back();
        if (!stack.empty()) {
            const int p = stack.back().node;
            low[static_cast<size_t>(p)] =
                std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(node)]);
            if (p != start && low[static_cast<size_t>(node)] >= disc[static_cast<size_t>(p)])
                is_ap[static_cast<size_t>(p)] = 1;
        }
    }
    if (root_children > 1) is_ap[static_cast<size_t>(start)] = 1;

    res.connected = visited == static_cast<int>(members.size());
    for (int v : members)
        if (is_ap[static_cast<size_t>(v)]) res.articulation.push_back(v);
    return res;
}

} // namespace

bool is_biconnected(const InducedView& view) {
    if (view.size() < 3) return false;
    const ApScan scan = articulation_scan(view);
    return scan.connected && scan.articulation.empty();
}

std::vector<int> articulation_points(const InducedView& view) {
    const ApScan scan = articulation_scan(view);
    if (!scan.connected) throw DisconnectedInput("articulation_points: view is not connected");
    return scan.articulation;
}

} // namespace cds2m
