#include <doctest.h>
#include <random>

#include <set>
#include <sstream>

#include "cds2m/errors.hpp"
#include "cds2m/grasp.hpp"
#include "cds2m/oracle.hpp"
#include "reference.hpp"

using namespace cds2m;

namespace {

Solution make_solution(std::vector<int> nodes) {
    Solution s;
    s.nodes = std::move(nodes);
    return s;
}

// Deterministic fields only; wall-clock times excluded on purpose.
std::string fingerprint(const std::optional<Solution>& best, const RunStats& stats) {
    std::ostringstream os;
    os << stats.iterations_run << '|' << stats.feasible_count << '|' << stats.best_iteration
       << '|';
    for (const auto& [size, count] : stats.size_histogram) os << size << ':' << count << ',';
    os << '|';
    if (best) {
        os << best->iteration_found << '@';
        for (int v : best->nodes) os << v << ' ';
    }
    return os.str();
}

} // namespace

TEST_CASE("necessary_set flags dominators of tight outside nodes") {
    // C4 plus x=4 adjacent to 0 and 1; S = cycle, m = 2.
    Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
    CHECK(necessary_set(g, {0, 1, 2, 3}, 2) == std::vector<int>{0, 1});
}

TEST_CASE("necessary_set is empty with slack everywhere") {
    Graph k5 = ref::complete_graph(5);
    CHECK(necessary_set(k5, {0, 1, 2}, 1).empty());
}

TEST_CASE("necessary_set of the full node set is empty") {
    Graph k5 = ref::complete_graph(5);
    CHECK(necessary_set(k5, {0, 1, 2, 3, 4}, 1).empty());
}

TEST_CASE("necessary nodes truly cannot be removed without breaking domination") {
    std::mt19937_64 seeds(61);
    int confirmed = 0;
    for (int round = 0; round < 20; ++round) {
        const int n = 10 + static_cast<int>(seeds() % 8);
        const int m = 1 + static_cast<int>(seeds() % 2);
        Graph g = generate_random({n, 50, seeds()});
        auto sol = grc_solve(g, m);
        if (!sol) continue;
        for (int u : necessary_set(g, sol->nodes, m)) {
            std::vector<int> without;
            for (int v : sol->nodes)
                if (v != u) without.push_back(v);
            bool dominates = true;
            NodeMask s = NodeMask::of(n, without);
            for (int v = 0; v < n && dominates; ++v)
                if (!s.test(v)) dominates = g.neighbor_mask(v).intersect_count(s) >= m;
            CHECK_FALSE(dominates);
            ++confirmed;
        }
    }
    CHECK(confirmed > 0);
}

TEST_CASE("correct trims K4 from four nodes to three") {
    Graph k4 = ref::complete_graph(4);
    Solution out = correct(k4, make_solution({0, 1, 2, 3}), 1);
    CHECK(out.size() == 3);
    CHECK(verify(k4, out.nodes, 1).is_feasible);
}

TEST_CASE("correct leaves C5 untouched") {
    Graph c5 = ref::cycle_graph(5);
    Solution out = correct(c5, make_solution({0, 1, 2, 3, 4}), 1);
    CHECK(out.nodes == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("correct reduces K6 with m=2 to a triangle") {
    Graph k6 = ref::complete_graph(6);
    Solution out = correct(k6, make_solution({0, 1, 2, 3, 4, 5}), 2);
    CHECK(out.size() == 3);
    CHECK(verify(k6, out.nodes, 2).is_feasible);
}

TEST_CASE("correct rejects infeasible input") {
    Graph c4 = ref::cycle_graph(4);
    CHECK_THROWS_AS(correct(c4, make_solution({0, 1}), 1), InfeasibleInput);
}

TEST_CASE("correct never grows the set and preserves feasibility") {
    std::mt19937_64 seeds(77);
    for (int round = 0; round < 25; ++round) {
        const int n = 10 + static_cast<int>(seeds() % 12);
        const int d = 30 + static_cast<int>(seeds() % 50);
        const int m = 1 + static_cast<int>(seeds() % 2);
        Graph g = generate_random({n, d, seeds()});
        std::mt19937_64 rng(seeds());
        auto raw = greedy_construct(g, {m, 40, 1.25}, static_cast<int>(seeds() % n), &rng);
        if (!raw) continue;
        Solution fixed = correct(g, *raw, m);
        CHECK(fixed.size() <= raw->size());
        CHECK(verify(g, fixed.nodes, m).is_feasible);
        std::set<int> before(raw->nodes.begin(), raw->nodes.end());
        for (int v : fixed.nodes) CHECK(before.count(v) == 1); // removal-only search
    }
}

TEST_CASE("grasp_solve nails K5 in the first iteration") {
    Graph k5 = ref::complete_graph(5);
    GraspParams params;
    params.greedy = {1, 500, 1.25};
    params.max_solutions = 10;
    params.seed = 42;
    auto [best, stats] = grasp_solve(k5, params);
    REQUIRE(best.has_value());
    CHECK(best->size() == 3);
    CHECK(best->iteration_found == 1);
    CHECK(stats.best_iteration == 1);
    CHECK(stats.iterations_run == 10);
    CHECK(stats.feasible_count == 10);
    CHECK(stats.size_histogram.at(3) == 10);
}

TEST_CASE("grasp_solve reports cleanly when nothing is feasible") {
    Graph star = ref::star_graph(10);
    GraspParams params;
    params.greedy = {1, 500, 1.25};
    params.max_solutions = 25;
    auto [best, stats] = grasp_solve(star, params);
    CHECK_FALSE(best.has_value());
    CHECK(stats.feasible_count == 0);
    CHECK(stats.best_iteration == 0);
    CHECK(stats.iterations_run == 25);
}

TEST_CASE("grasp_solve is deterministic for a fixed seed") {
    std::mt19937_64 seeds(2718);
    for (int round = 0; round < 4; ++round) {
        Graph g = generate_random({22, 35 + 10 * round, seeds()});
        GraspParams params;
        params.greedy = {1 + round % 2, 60, 1.25};
        params.max_solutions = 40;
        params.seed = seeds();
        auto [b1, s1] = grasp_solve(g, params);
        auto [b2, s2] = grasp_solve(g, params);
        CHECK(fingerprint(b1, s1) == fingerprint(b2, s2));
    }
}

TEST_CASE("worker count changes neither the best solution nor the counters") {
    Graph g = generate_random({26, 40, 12321});
    GraspParams params;
    params.greedy = {2, 60, 1.25};
    params.max_solutions = 60;
    params.seed = 5;
    auto [b1, s1] = grasp_solve(g, params);
    params.parallel_workers = 2;
    auto [b2, s2] = grasp_solve(g, params);
    CHECK(fingerprint(b1, s1) == fingerprint(b2, s2));
}

TEST_CASE("progress callback sees every iteration and a non-increasing incumbent") {
    Graph g = generate_random({20, 50, 9});
    GraspParams params;
    params.greedy = {1, 60, 1.25};
    params.max_solutions = 30;
    params.seed = 17;
    long long calls = 0;
    int last = -1;
    bool monotone = true;
    auto [best, stats] = grasp_solve(g, params, [&](long long, int incumbent) {
        ++calls;
        if (last != -1 && incumbent != -1 && incumbent > last) monotone = false;
        if (incumbent != -1) last = incumbent;
    });
    CHECK(calls == stats.iterations_run);
    CHECK(monotone);
}

TEST_CASE("every grasp solution is at least the exact optimum") {
    std::mt19937_64 seeds(31415);
    int compared = 0;
    for (int round = 0; round < 12; ++round) {
        const int n = 8 + static_cast<int>(seeds() % 5);
        const int d = 40 + static_cast<int>(seeds() % 40);
        const int m = 1 + static_cast<int>(seeds() % 2);
        Graph g = generate_random({n, d, seeds()});
        GraspParams params;
        params.greedy = {m, 60, 1.25};
        params.max_solutions = 80;
        params.seed = seeds();
        auto [best, stats] = grasp_solve(g, params);
        auto exact = exact_minimum(g, m);
        if (best) {
            REQUIRE(exact.has_value()); // heuristic feasible => exact feasible
            CHECK(best->size() >= exact->size());
            ++compared;
        }
    }
    CHECK(compared > 3);
}

TEST_CASE("grc_solve matches the small oracles") {
    Graph k5 = ref::complete_graph(5);
    auto a = grc_solve(k5, 1);
    REQUIRE(a.has_value());
    CHECK(a->size() == 3);

    Graph c5 = ref::cycle_graph(5);
    auto b = grc_solve(c5, 1);
    REQUIRE(b.has_value());
    CHECK(b->size() == 5);

    CHECK_FALSE(grc_solve(ref::star_graph(6), 1).has_value());
}

TEST_CASE("grasp params are validated") {
    Graph k4 = ref::complete_graph(4);
    GraspParams params;
    params.max_solutions = 0;
    CHECK_THROWS_AS(grasp_solve(k4, params), Error);
    params.max_solutions = 1;
    params.parallel_workers = 0;
    CHECK_THROWS_AS(grasp_solve(k4, params), Error);
}
