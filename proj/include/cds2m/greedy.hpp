#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cds2m/ear_growth.hpp"
#include "cds2m/graph.hpp"
#include "cds2m/solution.hpp"

namespace cds2m {

// Exact fraction used for ear scores; denominator is |In(P)| > 0.
// Comparing via cross-multiplication keeps tie-breaking platform-independent.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return num > 0; }
};

inline bool rational_greater(const Rational& a, const Rational& b) {
    return a.num * b.den > b.num * a.den;
}

// An ear waiting for selection, scored and annotated with the nodes it
// would newly help dominate.
struct Candidate {
    Ear ear;
    Rational dom;
    std::vector<int> uncovered;  // U(P): N[In(P)] \ S members still lacking dominators
    std::uint64_t order = 0;     // insertion sequence, breaks score ties
};

struct CandidateList {
    std::vector<Candidate> items;
    std::uint64_t next_order = 0;
};

struct GreedyParams {
    int m = 1;                 // domination requirement
    int candidate_target = 500; // M: list size that triggers selection, and its cap
    double alpha0 = 1.0;       // randomization upper bound; 1 = deterministic
};

void validate(const GreedyParams& params); // throws Error on bad values

// Node score: how much adding the set A helps u get m-dominated.
// u in A counts m - |N(u) ∩ S|; otherwise min(|N(u) ∩ A|, m - |N(u) ∩ S|).
// May be <= 0 once u is already m-dominated.
long long dom_node(const Graph& g, int u, const NodeMask& a, const std::vector<int>& dominated,
                   int m);

// Ear score: sum of dom_node over the not-yet-m-dominated part of
// N[In(P)] \ S, divided by |In(P)|. Saturated nodes contribute nothing, so
// the score is positive exactly when the ear advances domination.
// Throws EmptyInner when the ear has no interior.
Rational dom_ear(const Graph& g, const Ear& ear, const NodeMask& s_mask,
                 const std::vector<int>& dominated, int m);

// Pulls ears from the growth state until the list holds at least
// candidate_target entries or no further ear exists; only ears with a
// positive score are stored.
void collect_candidates(GrowthState& state, CandidateList& list, const GreedyParams& params);

// Index of the winning candidate: argmax of alpha_P * dom(P) with an
// independent alpha_P uniform in (1, alpha0) per candidate; earliest
// insertion wins ties. alpha0 = 1 is the plain deterministic argmax and
// consumes no randomness. Throws EmptyList on an empty list.
size_t select_best(const CandidateList& list, double alpha0, std::mt19937_64* rng);

// After `applied` was merged into S: rescore every candidate, split those
// sharing interior nodes with the applied ear at the shared nodes (keeping
// only pieces of >= 3 nodes), and drop anything scoring <= 0.
void update_candidates(CandidateList& list, const Ear& applied, const GrowthState& state, int m);

// Full greedy construction: grow from `root` until S m-dominates the graph.
// rng may be null when params.alpha0 == 1. Returns nothing when the ear
// supply runs out first. The returned Solution carries only the node set;
// provenance fields are the caller's business.
std::optional<Solution> greedy_construct(const Graph& g, const GreedyParams& params, int root,
                                         std::mt19937_64* rng);

} // namespace cds2m
