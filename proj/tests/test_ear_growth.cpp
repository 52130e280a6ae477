#include <doctest.h>
#include <random>

#include <algorithm>
#include <set>

#include "cds2m/biconnect.hpp"
#include "cds2m/ear_growth.hpp"
#include "cds2m/errors.hpp"
#include "reference.hpp"

using namespace cds2m;

namespace {

// Runs plain growth (apply every ear as found) with invariant checks after
// each application. Returns the number of ears applied.
int grow_all(const Graph& g, int r, bool check_dist = true) {
    GrowthState st = init_growth(g, r);
    st.check_after_apply = true; // 2-connectivity of S after every apply
    int applied = 0;
    while (auto ear = find_next_ear(st)) {
        apply_ear(st, *ear);
        ++applied;
        if (check_dist) {
            // Maintained distance may overestimate but never undercut the
            // true BFS distance to S.
            auto exact = ref::exact_dist_to_set(g, st.solution_nodes());
            for (int u = 0; u < g.node_count(); ++u) {
                if (!st.visited[static_cast<size_t>(u)]) continue;
                REQUIRE(st.dist[static_cast<size_t>(u)] >= exact[static_cast<size_t>(u)]);
            }
        }
    }
    return applied;
}

} // namespace

TEST_CASE("init_growth on K4 seeds each neighbor as its own branch root") {
    Graph k4 = ref::complete_graph(4);
    GrowthState st = init_growth(k4, 0);
    CHECK(st.queue_snapshot() == std::vector<int>{1, 2, 3});
    for (int u : {1, 2, 3}) {
        CHECK(st.root[static_cast<size_t>(u)] == u);
        CHECK(st.dist[static_cast<size_t>(u)] == 1);
        CHECK(st.parent[static_cast<size_t>(u)] == 0);
        CHECK(st.visited[static_cast<size_t>(u)]);
    }
    CHECK(st.dist[0] == 0);
    CHECK(st.root[0] == 0);
    CHECK(st.s_size == 0);
}

TEST_CASE("init_growth on a star center enqueues all leaves; no ear ever appears") {
    Graph star = ref::star_graph(3);
    GrowthState st = init_growth(star, 0);
    CHECK(st.queue_snapshot() == std::vector<int>{1, 2, 3});
    CHECK_FALSE(find_next_ear(st).has_value());
}

TEST_CASE("init_growth on an isolated root leaves the queue empty") {
    Graph g = Graph::from_edge_list(4, {{1, 2}, {2, 3}, {1, 3}});
    GrowthState st = init_growth(g, 0);
    CHECK(st.queue_snapshot().empty());
    CHECK_FALSE(find_next_ear(st).has_value());
}

TEST_CASE("first ear of K4 from node 0 is the triangle closing back-edge (1,2)") {
    Graph k4 = ref::complete_graph(4);
    GrowthState st = init_growth(k4, 0);
    auto ear = find_next_ear(st);
    REQUIRE(ear.has_value());
    CHECK(ear->is_cycle);
    CHECK(ear->path == std::vector<int>{0, 1, 2});
    CHECK(k4.has_edge(1, 2));
    CHECK(st.s_size == 0); // find does not expand S
}

TEST_CASE("trees yield no ears") {
    Graph p6 = ref::path_graph(6);
    GrowthState st = init_growth(p6, 2);
    CHECK_FALSE(find_next_ear(st).has_value());
}

TEST_CASE("the only ear of C5 is the full cycle") {
    Graph c5 = ref::cycle_graph(5);
    GrowthState st = init_growth(c5, 0);
    auto ear = find_next_ear(st);
    REQUIRE(ear.has_value());
    CHECK(ear->is_cycle);
    CHECK(ear->path.size() == 5);
    std::set<int> nodes(ear->path.begin(), ear->path.end());
    CHECK(nodes == std::set<int>{0, 1, 2, 3, 4});
    for (size_t i = 0; i + 1 < ear->path.size(); ++i)
        CHECK(c5.has_edge(ear->path[i], ear->path[i + 1]));
    CHECK(c5.has_edge(ear->path.back(), ear->path.front()));
}

TEST_CASE("applying the C5 cycle zeroes distances and self-roots everyone") {
    Graph c5 = ref::cycle_graph(5);
    GrowthState st = init_growth(c5, 0);
    auto ear = find_next_ear(st);
    REQUIRE(ear.has_value());
    apply_ear(st, *ear);
    CHECK(st.s_size == 5);
    for (int u = 0; u < 5; ++u) {
        CHECK(st.in_solution(u));
        CHECK(st.dist[static_cast<size_t>(u)] == 0);
        CHECK(st.root[static_cast<size_t>(u)] == u);
    }
    CHECK_FALSE(find_next_ear(st).has_value());
}

TEST_CASE("manual cycle + ear on two glued triangles rebuilds the full solution") {
    // nodes 0,1 shared edge; apexes 2 and 3
    Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    GrowthState st = init_growth(g, 0);
    st.check_after_apply = true;
    apply_ear(st, Ear{{0, 1, 2}, true});
    CHECK(st.solution_nodes() == std::vector<int>{0, 1, 2});
    apply_ear(st, Ear{{0, 3, 1}, false});
    CHECK(st.solution_nodes() == std::vector<int>{0, 1, 2, 3});
    CHECK(is_biconnected(InducedView(g, st.solution_nodes())));
    CHECK(st.dominated[2] == 2);
}

TEST_CASE("apply_ear rejects interiors that touch S and broken shapes") {
    Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    GrowthState st = init_growth(g, 0);
    apply_ear(st, Ear{{0, 1, 2}, true});
    CHECK_THROWS_AS(apply_ear(st, Ear{{0, 2, 1}, false}), EarNotOpen);   // inner 2 already in S
    CHECK_THROWS_AS(apply_ear(st, Ear{{0, 3, 3, 1}, false}), EarNotOpen); // repeated interior
    CHECK_THROWS_AS(apply_ear(st, Ear{{3, 0, 1}, false}), EarNotOpen);   // endpoint 3 not in S
    CHECK_THROWS_AS(apply_ear(st, Ear{{0, 1, 2}, true}), EarNotOpen);    // cycle onto nonempty S
    CHECK_THROWS_AS(apply_ear(st, Ear{{0, 3}, false}), EarNotOpen);      // too short

    GrowthState fresh = init_growth(g, 0);
    CHECK_THROWS_AS(apply_ear(fresh, Ear{{0, 3, 1}, false}), EarNotOpen); // open ear on empty S
    CHECK_THROWS_AS(apply_ear(fresh, Ear{{0, 2, 3}, true}), EarNotOpen);  // 2-3 not an edge
}

TEST_CASE("growth keeps S 2-connected and distances conservative on random graphs") {
    std::mt19937_64 seeds(2024);
    for (int round = 0; round < 25; ++round) {
        const int n = 8 + static_cast<int>(seeds() % 23);
        const int d = 20 + static_cast<int>(seeds() % 60);
        Graph g = generate_random({n, d, seeds()});
        grow_all(g, static_cast<int>(seeds() % static_cast<std::uint64_t>(n)));
    }
}

TEST_CASE("growth terminates and settles every eval flag on larger instances") {
    Graph g = generate_random({200, 10, 31});
    GrowthState st = init_growth(g, 0);
    long long steps = 0;
    while (auto ear = find_next_ear(st)) {
        apply_ear(st, *ear);
        REQUIRE(++steps <= 4LL * 200 * 200); // would only trip on runaway requeueing
    }
    for (int u = 0; u < g.node_count(); ++u) CHECK_FALSE(st.eval[static_cast<size_t>(u)]);
    CHECK(st.queue.empty());
}

TEST_CASE("ears returned by find_next_ear are valid open ears of the current S") {
    std::mt19937_64 seeds(99);
    for (int round = 0; round < 10; ++round) {
        Graph g = generate_random({16, 45, seeds()});
        GrowthState st = init_growth(g, static_cast<int>(seeds() % 16));
        while (auto ear = find_next_ear(st)) {
            if (ear->is_cycle) {
                CHECK(st.s_size == 0);
                for (int v : ear->path) CHECK_FALSE(st.in_solution(v));
                CHECK(g.has_edge(ear->path.back(), ear->path.front()));
            } else {
                CHECK(st.in_solution(ear->path.front()));
                CHECK(st.in_solution(ear->path.back()));
                CHECK(ear->path.front() != ear->path.back());
                for (size_t i = 1; i + 1 < ear->path.size(); ++i)
                    CHECK_FALSE(st.in_solution(ear->path[i]));
            }
            for (size_t i = 0; i + 1 < ear->path.size(); ++i)
                CHECK(g.has_edge(ear->path[i], ear->path[i + 1]));
            apply_ear(st, *ear);
        }
    }
}

TEST_CASE("dominated counters track |N(u) ∩ S| throughout growth") {
    Graph g = generate_random({20, 40, 8});
    GrowthState st = init_growth(g, 3);
    while (auto ear = find_next_ear(st)) {
        apply_ear(st, *ear);
        for (int u = 0; u < g.node_count(); ++u)
            CHECK(st.dominated[static_cast<size_t>(u)] ==
                  g.neighbor_mask(u).intersect_count(st.s_mask));
    }
}
