#include "cds2m/grasp.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "cds2m/biconnect.hpp"
#include "cds2m/errors.hpp"
#include "cds2m/log.hpp"
#include "cds2m/oracle.hpp"
#include "cds2m/rng.hpp"

namespace cds2m {

std::vector<int> necessary_set(const Graph& g, const std::vector<int>& s, int m) {
    const int n = g.node_count();
    NodeMask s_mask = NodeMask::of(n, s);
    NodeMask q(n);
    for (int u = 0; u < n; ++u) {
        if (s_mask.test(u)) continue;
        if (g.neighbor_mask(u).intersect_count(s_mask) == m) {
            NodeMask dominators = g.neighbor_mask(u);
            dominators &= s_mask;
            q |= dominators;
        }
    }
    return q.to_vector();
}

Solution correct(const Graph& g, const Solution& input, int m) {
    const Feasibility f = verify(g, input.nodes, m);
    if (!f.is_feasible) throw InfeasibleInput("correct: input solution is " + f.describe());

    const int n = g.node_count();
    NodeMask s = NodeMask::of(n, input.nodes);
    std::vector<int> dominated(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) dominated[static_cast<size_t>(v)] = g.neighbor_mask(v).intersect_count(s);

    NodeMask necessary(n);
    for (int v : necessary_set(g, input.nodes, m)) necessary.set(v);

    // Marks the S-neighbors of w once w sits at exactly m dominators; any
    // further loss would break domination. Nodes never leave Q.
    auto mark_tight = [&](int w) {
        if (dominated[static_cast<size_t>(w)] != m) return;
        NodeMask dominators = g.neighbor_mask(w);
        dominators &= s;
        necessary |= dominators;
    };

    bool removed = true;
    while (removed) {
        removed = false;
        for (int u : s.to_vector()) {
            if (necessary.test(u)) continue;
            if (dominated[static_cast<size_t>(u)] < m) continue; // u itself must stay dominated
            NodeMask trial = s;
            trial.reset(u);
            if (!is_biconnected(InducedView(g, trial))) continue;

            s = std::move(trial);
            for (int w : g.neighbors(u)) --dominated[static_cast<size_t>(w)];
            mark_tight(u);
            for (int w : g.neighbors(u))
                if (!s.test(w)) mark_tight(w);
            removed = true;
            break; // restart the pass
        }
    }

    Solution out = input;
    out.nodes = s.to_vector();
    return out;
}

namespace {

bool better(const Solution& a, const Solution& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.iteration_found < b.iteration_found;
}

} // namespace

std::pair<std::optional<Solution>, RunStats> grasp_solve(const Graph& g, const GraspParams& params,
                                                         const ProgressFn& progress) {
    validate(params.greedy);
    if (params.max_solutions < 1) throw Error("grasp params: max_solutions must be >= 1");
    if (params.parallel_workers < 1) throw Error("grasp params: parallel_workers must be >= 1");
    if (g.node_count() == 0) return {std::nullopt, RunStats{}};

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    std::atomic<long long> next_iteration{1};
    std::mutex mtx;
    std::optional<Solution> best;
    RunStats stats;

    auto worker = [&] {
        RunStats local;
        for (;;) {
            const long long it = next_iteration.fetch_add(1);
            if (it > params.max_solutions) break;
            if (params.time_limit &&
                elapsed_ms() >= static_cast<double>(params.time_limit->count()))
                break;

            std::mt19937_64 rng = make_stream(params.seed, static_cast<std::uint64_t>(it));
            const int root = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(g.node_count())));
            std::optional<Solution> sol = greedy_construct(g, params.greedy, root, &rng);
            ++local.iterations_run;

            if (sol) {
                Solution fixed = correct(g, *sol, params.greedy.m);
                fixed.iteration_found = it;
                fixed.seed = params.seed;
                fixed.elapsed_ms = elapsed_ms();
                ++local.feasible_count;
                ++local.size_histogram[fixed.size()];
                std::lock_guard<std::mutex> lock(mtx);
                if (!best || better(fixed, *best)) best = std::move(fixed);
                if (progress) progress(it, best ? best->size() : -1);
            } else if (progress) {
                std::lock_guard<std::mutex> lock(mtx);
                progress(it, best ? best->size() : -1);
            }
        }
        std::lock_guard<std::mutex> lock(mtx);
        stats.iterations_run += local.iterations_run;
        stats.feasible_count += local.feasible_count;
        for (const auto& [size, cnt] : local.size_histogram) stats.size_histogram[size] += cnt;
    };

    if (params.parallel_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(params.parallel_workers));
        for (int i = 0; i < params.parallel_workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (best) {
        stats.best_iteration = best->iteration_found;
        stats.best_time_ms = best->elapsed_ms;
    }
    return {std::move(best), std::move(stats)};
}

std::optional<Solution> grc_solve(const Graph& g, int m, int candidate_target) {
    if (g.node_count() == 0) return std::nullopt;
    int root = 0;
    for (int v = 1; v < g.node_count(); ++v)
        if (g.degree(v) > g.degree(root)) root = v;

    const auto t0 = std::chrono::steady_clock::now();
    GreedyParams params{m, candidate_target, 1.0};
    std::optional<Solution> sol = greedy_construct(g, params, root, nullptr);
    if (!sol) return std::nullopt;
    Solution fixed = correct(g, *sol, m);
    fixed.iteration_found = 1;
    fixed.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return fixed;
}

} // namespace cds2m
