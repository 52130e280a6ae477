#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cds2m/graph.hpp"
#include "cds2m/greedy.hpp"
#include "cds2m/solution.hpp"

namespace cds2m {

struct GraspParams {
    GreedyParams greedy{1, 500, 1.25};
    long long max_solutions = 25000; // iteration budget
    std::uint64_t seed = 0;
    int parallel_workers = 1;
    std::optional<std::chrono::milliseconds> time_limit;
};

struct RunStats {
    long long iterations_run = 0;
    long long feasible_count = 0;
    long long best_iteration = 0; // 0 = no feasible solution found
    double best_time_ms = 0.0;    // wall time to the incumbent (non-deterministic)
    std::map<int, long long> size_histogram;
};

// Called after each finished iteration with (iteration index, incumbent
// size; -1 while none). Serialized internally; keep it cheap.
using ProgressFn = std::function<void(long long iteration, int best_size)>;

// Q: nodes of S adjacent to some outside node with exactly m dominators;
// removing one of them would break m-domination. Assumes S m-dominating.
std::vector<int> necessary_set(const Graph& g, const std::vector<int>& s, int m);

// Local search: repeatedly drop one removable node (outside Q, still
// m-dominated itself, 2-connectivity preserved), rescanning from the lowest
// id after every removal, until a full pass removes nothing. Never grows
// the set and keeps it feasible. Throws InfeasibleInput on infeasible input.
Solution correct(const Graph& g, const Solution& s, int m);

// Multistart driver: per iteration draws a uniform root, runs the
// randomized construction, corrects it, and keeps the smallest feasible
// solution (ties to the earliest iteration). Deterministic for a fixed seed
// and no time limit — iteration RNG streams depend only on (seed, index),
// so worker count does not change the result.
std::pair<std::optional<Solution>, RunStats> grasp_solve(const Graph& g, const GraspParams& params,
                                                         const ProgressFn& progress = {});

// Deterministic single shot: root = highest-degree node (lowest id wins
// ties), alpha0 = 1, then correction.
std::optional<Solution> grc_solve(const Graph& g, int m, int candidate_target = 500);

} // namespace cds2m
