#include "cds2m/ear_growth.hpp"

#include <algorithm>
#include <cassert>

#include "cds2m/biconnect.hpp"
#include "cds2m/errors.hpp"
#include "cds2m/log.hpp"

namespace cds2m {

GrowthState init_growth(const Graph& g, int r) {
    if (r < 0 || r >= g.node_count()) throw Error("init_growth: root out of range");
    const size_t n = static_cast<size_t>(g.node_count());

    GrowthState st;
    st.graph = &g;
    st.start = r;
    st.dist.assign(n, -1);
    st.root.assign(n, -1);
    st.parent.assign(n, -1);
    st.children.assign(n, {});
    st.eval.assign(n, 1);
    st.visited.assign(n, 0);
    st.s_mask = NodeMask(g.node_count());
    st.dominated.assign(n, 0);

    st.dist[static_cast<size_t>(r)] = 0;
    st.root[static_cast<size_t>(r)] = r;
    st.visited[static_cast<size_t>(r)] = 1;
    // Each neighbor of r roots its own branch so the first qualifying
    // back-edge closes the initial cycle through r.
    for (int u : g.neighbors(r)) {
        st.visited[static_cast<size_t>(u)] = 1;
        st.parent[static_cast<size_t>(u)] = r;
        st.children[static_cast<size_t>(r)].push_back(u);
        st.dist[static_cast<size_t>(u)] = 1;
        st.root[static_cast<size_t>(u)] = u;
        st.queue.push_back(u);
    }
    return st;
}

namespace {

// Back-edge (s,t) opens an ear iff the root chains differ and, once S is
// nonempty, at least one endpoint lies outside S.
bool opens_ear(const GrowthState& st, int s, int t) {
    if (st.root[static_cast<size_t>(s)] == st.root[static_cast<size_t>(t)]) return false;
    if (st.s_size == 0) return true;
    return !st.s_mask.test(s) || !st.s_mask.test(t);
}

// Chain from u up to root(u), inclusive, in walk order (u first).
void walk_to_root(const GrowthState& st, int u, std::vector<int>& out) {
    out.clear();
    int x = u;
    for (;;) {
        out.push_back(x);
        if (x == st.root[static_cast<size_t>(u)]) break;
        x = st.parent[static_cast<size_t>(x)];
    }
}

Ear assemble_ear(const GrowthState& st, int s, int t) {
    std::vector<int> left, right;
    walk_to_root(st, s, left);  // s .. root(s)
    Ear ear;
    if (st.s_size == 0) {
        // Initial cycle through the BFS root r.
        ear.is_cycle = true;
        ear.path.push_back(st.start);
        ear.path.insert(ear.path.end(), left.rbegin(), left.rend());
        if (t != st.start) {
            walk_to_root(st, t, right); // t .. root(t), root(t) adjacent to r
            ear.path.insert(ear.path.end(), right.begin(), right.end());
        }
    } else {
        ear.path.assign(left.rbegin(), left.rend()); // root(s) .. s
        walk_to_root(st, t, right);                  // t .. root(t)
        ear.path.insert(ear.path.end(), right.begin(), right.end());
    }
    return ear;
}

} // namespace

std::optional<Ear> find_next_ear(GrowthState& state) {
    const Graph& g = *state.graph;
    for (;;) {
        if (state.cursor_node < 0) {
            if (state.queue.empty()) return std::nullopt;
            const int next = state.queue.front();
            state.queue.pop_front();
            if (!state.eval[static_cast<size_t>(next)]) continue;
            state.cursor_node = next;
            state.cursor_idx = 0;
            if (log::trace_enabled())
                log::out() << "[growth] explore " << next << " root=" << state.root[static_cast<size_t>(next)]
                           << " dist=" << state.dist[static_cast<size_t>(next)] << "\n";
        }

        const int cur = state.cursor_node;
        const auto& adj = g.neighbors(cur);
        while (state.cursor_idx < adj.size()) {
            const int u = adj[state.cursor_idx++];
            if (!state.visited[static_cast<size_t>(u)]) {
                // Tree edge: attach u below cur.
                state.visited[static_cast<size_t>(u)] = 1;
                state.parent[static_cast<size_t>(u)] = cur;
                state.children[static_cast<size_t>(cur)].push_back(u);
                state.root[static_cast<size_t>(u)] = state.root[static_cast<size_t>(cur)];
                state.dist[static_cast<size_t>(u)] = state.dist[static_cast<size_t>(cur)] + 1;
                state.eval[static_cast<size_t>(u)] = 1;
                state.queue.push_back(u);
                continue;
            }
            if (u == state.parent[static_cast<size_t>(cur)] || state.parent[static_cast<size_t>(u)] == cur)
                continue; // tree edge seen from the other side
            if (opens_ear(state, cur, u)) {
                Ear ear = assemble_ear(state, cur, u);
                if (log::trace_enabled())
                    log::out() << "[growth] back-edge (" << cur << "," << u << ") opens "
                               << (ear.is_cycle ? "cycle" : "ear") << " of " << ear.path.size()
                               << " nodes\n";
                return ear;
            }
        }
        // Scan of cur complete.
        state.eval[static_cast<size_t>(cur)] = 0;
        state.cursor_node = -1;
    }
}

void apply_ear(GrowthState& state, const Ear& ear) {
    const Graph& g = *state.graph;
    const size_t len = ear.path.size();
    if (len < 3) throw EarNotOpen("ear must span at least 3 nodes");

    // Structural validation.
    for (size_t i = 0; i + 1 < len; ++i)
        if (!g.has_edge(ear.path[i], ear.path[i + 1]))
            throw EarNotOpen("consecutive ear nodes are not adjacent");
    if (ear.is_cycle) {
        if (state.s_size != 0) throw EarNotOpen("initial cycle applied to nonempty S");
        if (!g.has_edge(ear.path.back(), ear.path.front()))
            throw EarNotOpen("cycle closing edge missing");
    } else {
        if (state.s_size == 0) throw EarNotOpen("open ear applied to empty S");
        if (ear.path.front() == ear.path.back()) throw EarNotOpen("ear endpoints coincide");
        if (!state.s_mask.test(ear.path.front()) || !state.s_mask.test(ear.path.back()))
            throw EarNotOpen("ear endpoints must lie in S");
    }
    NodeMask seen(g.node_count());
    for (size_t i = ear.inner_begin(); i < ear.inner_end(); ++i) {
        const int u = ear.path[i];
        if (state.s_mask.test(u)) throw EarNotOpen("ear interior touches S");
        if (seen.test(u)) throw EarNotOpen("repeated interior node");
        seen.set(u);
    }

    // Pre-update distances of the anchors; the distance correction for a
    // descendant subtracts its anchor's old value.
    std::vector<int> old_dist(len);
    for (size_t i = 0; i < len; ++i) old_dist[i] = state.dist[static_cast<size_t>(ear.path[i])];

    // Absorb new nodes into S.
    for (size_t i = ear.inner_begin(); i < ear.inner_end(); ++i) {
        const int u = ear.path[i];
        state.s_mask.set(u);
        ++state.s_size;
        state.dist[static_cast<size_t>(u)] = 0;
        state.root[static_cast<size_t>(u)] = u;
        for (int w : g.neighbors(u)) ++state.dominated[static_cast<size_t>(w)];
    }

    // Re-anchor descendants and queue everything touched for re-evaluation.
    auto requeue = [&](int u) {
        state.eval[static_cast<size_t>(u)] = 1;
        state.queue.push_back(u);
        if (state.cursor_node == u) state.cursor_node = -1; // abandon stale scan
    };
    size_t requeued = 0;
    std::vector<int> dfs;
    for (size_t i = 0; i < len; ++i) {
        const int anchor = ear.path[i];
        requeue(anchor);
        ++requeued;
        dfs.clear();
        for (int c : state.children[static_cast<size_t>(anchor)])
            if (!state.s_mask.test(c)) dfs.push_back(c);
        while (!dfs.empty()) {
            const int v = dfs.back();
            dfs.pop_back();
            state.root[static_cast<size_t>(v)] = anchor;
            state.dist[static_cast<size_t>(v)] -= old_dist[i];
            requeue(v);
            ++requeued;
            for (int c : state.children[static_cast<size_t>(v)])
                if (!state.s_mask.test(c)) dfs.push_back(c);
        }
    }
    if (log::trace_enabled())
        log::out() << "[growth] applied " << (ear.is_cycle ? "cycle" : "ear") << " of "
                   << ear.path.size() << " nodes; |S|=" << state.s_size << ", requeued "
                   << requeued << "\n";

    if (state.check_after_apply) {
        if (!is_biconnected(InducedView(g, state.s_mask)))
            throw Error("growth invariant violated: S is not 2-connected after apply_ear");
    }
}

} // namespace cds2m
