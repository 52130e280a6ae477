#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cds2m/errors.hpp"
#include "cds2m/nodemask.hpp"

namespace cds2m {

// Simple undirected graph on nodes 0..n-1. Immutable once built; adjacency
// lists are sorted ascending and mirrored into per-node bit masks for O(1)
// edge tests and fast neighborhood intersections.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int u) const { return adj_[static_cast<size_t>(u)]; }
    const NodeMask& neighbor_mask(int u) const { return adj_mask_[static_cast<size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adj_[static_cast<size_t>(u)].size()); }
    bool has_edge(int u, int v) const { return adj_mask_[static_cast<size_t>(u)].test(v); }

    // Edges as (u,v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

private:
    Graph() = default;

    int n_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<NodeMask> adj_mask_;
};

// Parameters of a random benchmark instance from the v{n}_d{density} family.
struct InstanceSpec {
    int n = 0;
    int density_percent = 0;
    std::uint64_t seed = 0;
};

// "v{n}_d{density}" (no seed suffix).
std::string instance_name(const InstanceSpec& spec);

// Erdos-Renyi G(n, p) with p = density_percent / 100, drawn from a seeded
// mt19937_64 in a fixed pair order; identical specs give bit-identical
// graphs on every platform. Output may be disconnected.
Graph generate_random(const InstanceSpec& spec);

// Instance file format: header "<n> <edge_count>", then one "<u> <v>" line
// per edge with 0 <= u < v < n. Blank lines and lines starting with '#' are
// skipped. load(save(g)) == g.
Graph load_instance(const std::string& path);
void save_instance(const Graph& g, const std::string& path);

// Solution file format: one node id per line, strictly ascending; '#'
// comments and blank lines allowed.
std::vector<int> load_solution(const std::string& path);
void save_solution(const std::vector<int>& nodes, const std::string& path);

} // namespace cds2m
