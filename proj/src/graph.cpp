#include "cds2m/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cds2m/rng.hpp"

namespace cds2m {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("node count must be non-negative");
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
        if (u == v) throw SelfLoop("self-loop at node " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.edge_count_ = static_cast<std::int64_t>(norm.size());
    g.adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : norm) {
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.adj_mask_.assign(static_cast<size_t>(n), NodeMask(n));
    for (int u = 0; u < n; ++u)
        for (int v : g.adj_[static_cast<size_t>(u)]) g.adj_mask_[static_cast<size_t>(u)].set(v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string instance_name(const InstanceSpec& spec) {
    return "v" + std::to_string(spec.n) + "_d" + std::to_string(spec.density_percent);
}

Graph generate_random(const InstanceSpec& spec) {
    if (spec.n < 3) throw Error("instance spec: n must be >= 3");
    if (spec.density_percent < 1 || spec.density_percent > 100)
        throw Error("instance spec: density_percent must be in [1,100]");
    const double p = spec.density_percent / 100.0;
    std::mt19937_64 rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
            if (unit_real(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edge_list(spec.n, edges);
}

namespace {

// Content lines of a file: 1-based line number plus text, with blank and
// '#' lines dropped.
std::vector<std::pair<int, std::string>> content_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

bool parse_ints(const std::string& s, std::vector<long long>& out) {
    std::istringstream is(s);
    out.clear();
    long long x;
    while (is >> x) out.push_back(x);
    std::string rest;
    return !(is.bad()) && !(is >> rest) && is.eof();
}

} // namespace

Graph load_instance(const std::string& path) {
    auto lines = content_lines(path);
    if (lines.empty()) throw ParseError(path, 1, "missing header line");

    std::vector<long long> nums;
    if (!parse_ints(lines[0].second, nums) || nums.size() != 2)
        throw ParseError(path, lines[0].first, "expected header \"<n> <edge_count>\"");
    const long long n = nums[0], m = nums[1];
    if (n < 0 || m < 0) throw ParseError(path, lines[0].first, "negative header value");
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw ParseError(path, lines.empty() ? 1 : lines.back().first,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(path, lines[static_cast<size_t>(m) + 1].first, "unexpected extra line");

    std::vector<std::pair<int, int>> edges;
    std::vector<NodeMask> seen(static_cast<size_t>(n), NodeMask(static_cast<int>(n)));
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) {
        const auto& [lineno, text] = lines[static_cast<size_t>(i)];
        if (!parse_ints(text, nums) || nums.size() != 2)
            throw ParseError(path, lineno, "expected edge line \"<u> <v>\"");
        const long long u = nums[0], v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(path, lineno, "edge endpoint out of range");
        if (u >= v) throw ParseError(path, lineno, "edges must satisfy u < v");
        if (seen[static_cast<size_t>(u)].test(static_cast<int>(v)))
            throw ParseError(path, lineno, "duplicate edge");
        seen[static_cast<size_t>(u)].set(static_cast<int>(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

void save_instance(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (!out) throw Error("write failed: " + path);
}

std::vector<int> load_solution(const std::string& path) {
    auto lines = content_lines(path);
    std::vector<int> nodes;
    std::vector<long long> nums;
    for (const auto& [lineno, text] : lines) {
        if (!parse_ints(text, nums) || nums.size() != 1)
            throw ParseError(path, lineno, "expected one node id per line");
        if (nums[0] < 0) throw ParseError(path, lineno, "negative node id");
        if (!nodes.empty() && nums[0] <= nodes.back())
            throw ParseError(path, lineno, "node ids must be strictly ascending");
        nodes.push_back(static_cast<int>(nums[0]));
    }
    return nodes;
}

void save_solution(const std::vector<int>& nodes, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (int v : nodes) out << v << '\n';
    if (!out) throw Error("write failed: " + path);
}

} // namespace cds2m
