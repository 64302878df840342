#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "independence.hpp"
#include "types.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Vertex-weight expansion: each vertex becomes a clique of its weight, each
// edge a complete bipartite link between the cliques.
// ---------------------------------------------------------------------------

struct BlowupMap {
    WeightedGraph source;
    Graph target;
    std::vector<std::vector<int>> clique_of;  // source vertex -> target vertices, ascending
    std::vector<int> source_of;               // target vertex -> source vertex

    VertexSet clique_mask(int v) const {
        VertexSet m = 0;
        for (int t : clique_of[static_cast<size_t>(v)]) m |= bit(t);
        return m;
    }
};

// Cliques are laid out in source vertex order with ascending indices, so
// lexicographic tie-breaks on the target line up with those on the source.
inline BlowupMap blow_up(const WeightedGraph& src) {
    long long total = 0;
    for (int v = 0; v < src.g.n; ++v) {
        if (src.w[static_cast<size_t>(v)] < 1) throw std::invalid_argument("weights must be at least 1");
        total += src.w[static_cast<size_t>(v)];
    }
    if (total > 64) throw std::runtime_error("blow-up needs " + std::to_string(total) + " vertices; limit is 64");

    BlowupMap map;
    map.source = src;
    map.target = Graph(static_cast<int>(total));
    map.clique_of.resize(static_cast<size_t>(src.g.n));
    int next = 0;
    for (int v = 0; v < src.g.n; ++v)
        for (long long i = 0; i < src.w[static_cast<size_t>(v)]; ++i) {
            map.clique_of[static_cast<size_t>(v)].push_back(next++);
            map.source_of.push_back(v);
        }
    for (int a = 0; a < map.target.n; ++a)
        for (int b = a + 1; b < map.target.n; ++b) {
            int u = map.source_of[static_cast<size_t>(a)], v = map.source_of[static_cast<size_t>(b)];
            if (u == v || src.g.has_edge(u, v)) map.target.add_edge(a, b);
        }
    return map;
}

inline BlowupMap blow_up(const Graph& g, const std::vector<long long>& w) {
    if (static_cast<int>(w.size()) != g.n) throw std::invalid_argument("one weight per vertex required");
    WeightedGraph wg(g);
    wg.w = w;
    return blow_up(wg);
}

// Source image of an independent set of the target: the vertices whose
// cliques are hit.  Independence carries over because target vertices of
// adjacent source vertices are themselves adjacent.
inline VertexSet project(const BlowupMap& map, VertexSet target_set) {
    if (!is_independent(map.target, target_set))
        throw std::domain_error("projection needs an independent set of the target");
    VertexSet out = 0;
    for (VertexSet t = target_set; t;) {
        int a = lowest_vertex(t);
        t &= t - 1;
        out |= bit(map.source_of[static_cast<size_t>(a)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weighted counts and the counting equivalence
// ---------------------------------------------------------------------------

// W_k = sum over independent k-sets of the product of vertex weights; with
// unit weights this is the plain count N_k.
inline std::vector<BigInt> weighted_counts(const WeightedGraph& wg, int cap = 20) {
    IndependentSets sets = enumerate_independent_sets(wg.g, cap);
    std::vector<BigInt> out;
    for (const auto& group : sets.by_size) {
        BigInt total = 0;
        for (VertexSet s : group) {
            BigInt prod = 1;
            for (VertexSet t = s; t;) {
                int v = lowest_vertex(t);
                t &= t - 1;
                prod *= wg.w[static_cast<size_t>(v)];
            }
            total += prod;
        }
        out.push_back(total);
    }
    return out;
}

struct EquivalenceReport {
    std::vector<BigInt> source_weights;  // W_k of the weighted source
    std::vector<BigInt> target_counts;   // N_k of the unweighted target
    bool pass = false;                   // equal for every k (so alpha agrees too)
};

inline EquivalenceReport verify_equivalence(const WeightedGraph& src, int cap = 20) {
    BlowupMap map = blow_up(src);
    EquivalenceReport rep;
    rep.source_weights = weighted_counts(src, cap);
    rep.target_counts = weighted_counts(WeightedGraph(map.target), cap);
    rep.pass = rep.source_weights == rep.target_counts;
    return rep;
}

// ---------------------------------------------------------------------------
// Expandability of pattern-defined classes
// ---------------------------------------------------------------------------

// A class defined by forbidden patterns survives the blow-up exactly when no
// pattern contains true twins.  For a pattern that does, deleting one twin
// and doubling the weight of the other blows back up to the pattern itself,
// which witnesses the failure.
struct ExpandabilityVerdict {
    bool has_true_twins = false;
    std::pair<int, int> twins{-1, -1};  // a witnessing pair when present
    WeightedGraph counterexample;       // blows up to the pattern when present
};

inline ExpandabilityVerdict expandability_verdict(const Graph& pattern) {
    ExpandabilityVerdict v;
    auto pairs = true_twins(pattern);
    if (pairs.empty()) return v;
    v.has_true_twins = true;
    v.twins = pairs.front();
    auto [kept, old_of] = induced_subgraph(pattern, pattern.vertices() & ~bit(v.twins.second));
    v.counterexample = WeightedGraph(kept);
    for (size_t i = 0; i < old_of.size(); ++i)
        if (old_of[i] == v.twins.first) v.counterexample.w[i] = 2;
    return v;
}

inline std::vector<ExpandabilityVerdict> expandability_check(const std::vector<Graph>& patterns) {
    std::vector<ExpandabilityVerdict> out;
    out.reserve(patterns.size());
    for (const Graph& p : patterns) out.push_back(expandability_verdict(p));
    return out;
}

inline bool class_expandable(const std::vector<Graph>& patterns) {
    for (const Graph& p : patterns)
        if (!true_twins(p).empty()) return false;
    return true;
}

}  // namespace hardcore
