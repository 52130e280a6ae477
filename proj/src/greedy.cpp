#include "cds2m/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "cds2m/errors.hpp"
#include "cds2m/log.hpp"
#include "cds2m/rng.hpp"

namespace cds2m {

void validate(const GreedyParams& params) {
    if (params.m < 1) throw Error("greedy params: m must be >= 1");
    if (params.candidate_target < 1) throw Error("greedy params: candidate_target must be >= 1");
    if (params.alpha0 < 1.0) throw Error("greedy params: alpha0 must be >= 1");
}

long long dom_node(const Graph& g, int u, const NodeMask& a, const std::vector<int>& dominated,
                   int m) {
    const long long need = static_cast<long long>(m) - dominated[static_cast<size_t>(u)];
    if (a.test(u)) return need;
    return std::min(static_cast<long long>(g.neighbor_mask(u).intersect_count(a)), need);
}

namespace {

struct EarScore {
    Rational dom;
    std::vector<int> uncovered;
};

EarScore evaluate_ear(const Graph& g, const Ear& ear, const NodeMask& s_mask,
                      const std::vector<int>& dominated, int m) {
    if (ear.inner_size() == 0) throw EmptyInner("ear has no interior nodes");

    NodeMask in(g.node_count());
    for (size_t i = ear.inner_begin(); i < ear.inner_end(); ++i) in.set(ear.path[i]);

    NodeMask reach = in; // N[In(P)]
    in.for_each([&](int u) { reach |= g.neighbor_mask(u); });
    reach.and_not(s_mask);

    // The sum runs over U(P), the still-undominated part of N[In(P)] \ S;
    // saturated nodes contribute nothing, so dom(P) > 0 exactly when the
    // ear advances domination. Every U(P) term is >= 0 by construction.
    EarScore score;
    long long sum = 0;
    reach.for_each([&](int v) {
        if (dominated[static_cast<size_t>(v)] >= m) return;
        sum += dom_node(g, v, in, dominated, m);
        score.uncovered.push_back(v);
    });
    score.dom = Rational{sum, static_cast<long long>(ear.inner_size())};
    return score;
}

bool ear_still_valid(const GrowthState& st, const Ear& ear) {
    if (ear.is_cycle && st.s_size != 0) return false;
    if (!ear.is_cycle &&
        (!st.s_mask.test(ear.path.front()) || !st.s_mask.test(ear.path.back())))
        return false;
    for (size_t i = ear.inner_begin(); i < ear.inner_end(); ++i)
        if (st.s_mask.test(ear.path[i])) return false;
    return true;
}

bool is_m_dominating(const GrowthState& st, int m) {
    if (st.s_size == 0) return false;
    const int n = st.graph->node_count();
    for (int v = 0; v < n; ++v)
        if (!st.s_mask.test(v) && st.dominated[static_cast<size_t>(v)] < m) return false;
    return true;
}

} // namespace

Rational dom_ear(const Graph& g, const Ear& ear, const NodeMask& s_mask,
                 const std::vector<int>& dominated, int m) {
    return evaluate_ear(g, ear, s_mask, dominated, m).dom;
}

void collect_candidates(GrowthState& state, CandidateList& list, const GreedyParams& params) {
    const Graph& g = *state.graph;
    while (static_cast<int>(list.items.size()) < params.candidate_target) {
        std::optional<Ear> ear = find_next_ear(state);
        if (!ear) break;
        EarScore score = evaluate_ear(g, *ear, state.s_mask, state.dominated, params.m);
        if (!score.dom.positive()) continue;
        list.items.push_back(
            {std::move(*ear), score.dom, std::move(score.uncovered), list.next_order++});
    }
}

size_t select_best(const CandidateList& list, double alpha0, std::mt19937_64* rng) {
    if (list.items.empty()) throw EmptyList("select_best: candidate list is empty");
    if (alpha0 <= 1.0) {
        size_t best = 0;
        for (size_t i = 1; i < list.items.size(); ++i)
            if (rational_greater(list.items[i].dom, list.items[best].dom)) best = i;
        return best;
    }
    if (!rng) throw Error("select_best: randomized selection needs an rng");
    size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < list.items.size(); ++i) {
        const double alpha = 1.0 + unit_real(*rng) * (alpha0 - 1.0);
        const double value = alpha * list.items[i].dom.value();
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    return best;
}

namespace {

// Pieces of a candidate whose interior got absorbed into S: the path is cut
// at every absorbed node. Cycles are cut cyclically (the wrap segment uses
// the closing edge); a cycle with a single cut node cannot yield an open
// ear and is dropped entirely.
std::vector<std::vector<int>> split_ear(const Ear& ear, const NodeMask& absorbed) {
    std::vector<size_t> cuts;
    for (size_t i = 0; i < ear.path.size(); ++i)
        if (absorbed.test(ear.path[i])) cuts.push_back(i);
    assert(!cuts.empty());

    std::vector<std::vector<int>> pieces;
    auto emit = [&](size_t from, size_t to) { // inclusive, along the stored path
        if (to - from + 1 < 3) return;
        pieces.emplace_back(ear.path.begin() + static_cast<long>(from),
                            ear.path.begin() + static_cast<long>(to) + 1);
    };
    if (!ear.is_cycle) {
        size_t prev = 0;
        for (size_t c : cuts) {
            if (c != prev) emit(prev, c);
            prev = c;
        }
        if (prev != ear.path.size() - 1) emit(prev, ear.path.size() - 1);
    } else {
        if (cuts.size() < 2) return pieces;
        for (size_t i = 0; i + 1 < cuts.size(); ++i) emit(cuts[i], cuts[i + 1]);
        // Wrap-around piece through the closing edge.
        const size_t wrap_len = (ear.path.size() - cuts.back()) + cuts.front() + 1;
        if (wrap_len >= 3) {
            std::vector<int> piece(ear.path.begin() + static_cast<long>(cuts.back()),
                                   ear.path.end());
            piece.insert(piece.end(), ear.path.begin(),
                         ear.path.begin() + static_cast<long>(cuts.front()) + 1);
            pieces.push_back(std::move(piece));
        }
    }
    return pieces;
}

} // namespace

void update_candidates(CandidateList& list, const Ear& applied, const GrowthState& state, int m) {
    const Graph& g = *state.graph;
    NodeMask absorbed(g.node_count());
    for (size_t i = applied.inner_begin(); i < applied.inner_end(); ++i)
        absorbed.set(applied.path[i]);

    std::vector<Candidate> kept;
    kept.reserve(list.items.size());
    std::vector<Candidate> splits;
    for (Candidate& c : list.items) {
        bool overlaps = false;
        for (size_t i = c.ear.inner_begin(); i < c.ear.inner_end() && !overlaps; ++i)
            overlaps = absorbed.test(c.ear.path[i]);
        if (!overlaps) {
            EarScore score = evaluate_ear(g, c.ear, state.s_mask, state.dominated, m);
            if (!score.dom.positive()) continue;
            c.dom = score.dom;
            c.uncovered = std::move(score.uncovered);
            kept.push_back(std::move(c));
            continue;
        }
        for (std::vector<int>& piece : split_ear(c.ear, absorbed)) {
            Ear part{std::move(piece), false};
            EarScore score = evaluate_ear(g, part, state.s_mask, state.dominated, m);
            if (!score.dom.positive()) continue;
            splits.push_back({std::move(part), score.dom, std::move(score.uncovered), 0});
        }
    }
    list.items = std::move(kept);
    for (Candidate& c : splits) {
        c.order = list.next_order++;
        list.items.push_back(std::move(c));
    }
}

std::optional<Solution> greedy_construct(const Graph& g, const GreedyParams& params, int root,
                                         std::mt19937_64* rng) {
    validate(params);
    if (root < 0 || root >= g.node_count()) throw Error("greedy_construct: root out of range");

    GrowthState state = init_growth(g, root);
    CandidateList cands;
    for (;;) {
        if (is_m_dominating(state, params.m)) break;
        collect_candidates(state, cands, params);
        if (cands.items.empty()) {
            if (log::info_enabled())
                log::out() << "[greedy] ears exhausted before domination (root " << root << ")\n";
            return std::nullopt;
        }
        const size_t pick = select_best(cands, params.alpha0, rng);
        Candidate chosen = std::move(cands.items[pick]);
        cands.items.erase(cands.items.begin() + static_cast<long>(pick));
        if (!ear_still_valid(state, chosen.ear)) {
            assert(false && "stale candidate survived update_candidates");
            continue;
        }
        apply_ear(state, chosen.ear);
        update_candidates(cands, chosen.ear, state, params.m);
    }

    Solution sol;
    sol.nodes = state.solution_nodes();
    return sol;
}

} // namespace cds2m
