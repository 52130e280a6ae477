#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "cds2m/graph.hpp"
#include "cds2m/nodemask.hpp"

namespace cds2m {

// A path to be merged into the growing 2-connected subgraph S. For an open
// ear the two (distinct) endpoints are in S and the interior is not. The
// first ear is a cycle: no node is in S and the closing edge runs between
// path.back() and path.front().
struct Ear {
    std::vector<int> path;
    bool is_cycle = false;

    // Interior range as indices into path: the whole path for the initial
    // cycle, everything but the endpoints otherwise.
    size_t inner_begin() const { return is_cycle ? 0 : 1; }
    size_t inner_end() const { return is_cycle ? path.size() : path.size() - 1; }
    size_t inner_size() const { return inner_end() - inner_begin(); }
};

// Adapted BFS over one graph: a BFS forest plus the partial solution S.
// For every node it maintains the nearest S-ancestor (root), the tree
// distance to it (dist), and a re-evaluation flag. Single-owner; mutate only
// through init_growth / find_next_ear / apply_ear. Several states over the
// same Graph may run in parallel.
struct GrowthState {
    const Graph* graph = nullptr;
    int start = -1; // BFS root r

    std::vector<int> dist;           // -1 until visited; 0 on S
    std::vector<int> root;           // nearest S-ancestor (self for S nodes)
    std::vector<int> parent;         // BFS tree parent, -1 for none
    std::vector<std::vector<int>> children;
    std::vector<char> eval;          // true while a (re)evaluation is pending
    std::vector<char> visited;
    std::deque<int> queue;

    NodeMask s_mask;                 // membership of S
    int s_size = 0;
    std::vector<int> dominated;      // |N(u) ∩ S| per node

    // Resumable scan position of the node currently being evaluated.
    int cursor_node = -1;
    size_t cursor_idx = 0;

    // Test hook: re-check 2-connectivity of S after every apply_ear.
    bool check_after_apply = false;

    bool in_solution(int u) const { return s_mask.test(u); }
    std::vector<int> solution_nodes() const { return s_mask.to_vector(); }
    std::vector<int> queue_snapshot() const { return {queue.begin(), queue.end()}; }
};

// Fresh state: S = ∅, r visited at distance 0, every neighbor of r visited
// at distance 1 as its own root and enqueued in ascending id order.
GrowthState init_growth(const Graph& g, int r);

// Resumes the BFS until the next back-edge closing an open ear of S (or the
// initial cycle when S = ∅) is found; returns it without touching S.
// Returns nothing once the queue runs dry.
std::optional<Ear> find_next_ear(GrowthState& state);

// Merges the ear into S and repairs the forest bookkeeping: ear nodes get
// dist 0 and become their own roots; every descendant reachable without
// crossing S is re-anchored to its nearest ear node with its distance
// reduced accordingly; all touched nodes are re-enqueued for re-evaluation.
// Throws EarNotOpen when the ear is not a valid open ear of the current S.
void apply_ear(GrowthState& state, const Ear& ear);

} // namespace cds2m
