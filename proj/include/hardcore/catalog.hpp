#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const Graph& p : parts) n += p.n;
    Graph g(n);
    int off = 0;
    for (const Graph& p : parts) {
        for (int u = 0; u < p.n; ++u)
            for (VertexSet t = p.adj[static_cast<size_t>(u)] & ~((bit(u) << 1) - 1); t;) {
                int v = lowest_vertex(t);
                t &= t - 1;
                g.add_edge(off + u, off + v);
            }
        off += p.n;
    }
    return g;
}

// The 10-vertex running example: bipartite, pathwidth 3.  Vertices are
// numbered in order of first appearance in its standard 7-bag width-3
// decomposition (see fig1_bags).
inline Graph fig1_graph() {
    Graph g(10);
    const int edges[][2] = {{2, 1}, {1, 0}, {0, 4}, {4, 2}, {2, 6}, {6, 5}, {5, 3}, {3, 8},
                            {8, 7}, {7, 9}, {9, 3}, {4, 5}, {6, 8}, {0, 3}, {2, 7}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline std::vector<VertexSet> fig1_bags() {
    auto s = [](std::initializer_list<int> xs) { VertexSet m = 0; for (int x : xs) m |= bit(x); return m; };
    return {s({0, 1, 2, 3}), s({0, 2, 3, 4}), s({2, 3, 4, 5}), s({2, 3, 5, 6}),
            s({2, 3, 6, 7}), s({3, 6, 7, 8}), s({3, 7, 8, 9})};
}

// The two sides of the unique bipartition of fig1_graph.
inline std::pair<VertexSet, VertexSet> fig1_sides() {
    auto s = [](std::initializer_list<int> xs) { VertexSet m = 0; for (int x : xs) m |= bit(x); return m; };
    return {s({0, 2, 5, 8, 9}), s({1, 3, 4, 6, 7})};
}

// Four independent groups A,B,C,D of size k, complete bipartite between
// consecutive groups; pathwidth 2k-1.
inline Graph p4_blowup(int k) {
    if (k < 1) throw std::invalid_argument("group size must be positive");
    Graph g(4 * k);
    for (int grp = 0; grp + 1 < 4; ++grp)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) g.add_edge(grp * k + i, (grp + 1) * k + j);
    return g;
}

inline VertexSet p4_group(int k, int grp) {
    VertexSet m = 0;
    for (int i = 0; i < k; ++i) m |= bit(grp * k + i);
    return m;
}

// 3-dimensional cube graph: vertices are 3-bit strings, edges flip one bit.
inline Graph cube_graph() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    return g;
}

// 6-cycle 0..5 plus b mutually nonadjacent centers, each adjacent to the
// alternating triple {0,2,4}.
inline Graph bw3_star(int b) {
    if (b < 1) throw std::invalid_argument("need at least one center");
    Graph g(6 + b);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
    for (int c = 0; c < b; ++c)
        for (int x : {0, 2, 4}) g.add_edge(6 + c, x);
    return g;
}

// Line graph of K4 (the octahedron): vertices are the 6 edges of K4,
// adjacent when they share an endpoint.
inline Graph line_of_k4() {
    const std::array<std::pair<int, int>, 6> e = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    Graph g(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            auto [a, b] = e[static_cast<size_t>(i)];
            auto [c, d] = e[static_cast<size_t>(j)];
            if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
        }
    return g;
}

// Line graph of K33 (the 3x3 rook's graph): vertices (i,j), adjacent when
// they share a row or a column.
inline Graph line_of_k33() {
    Graph g(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
    return g;
}

// Circulant bipartite graph: rows 0..n-1, columns n..2n-1, row i adjacent to
// columns i, i+1, ..., i+delta-1 (mod n).  delta-regular; the largest
// complete bipartite subgraph has side floor((delta+1)/2).
inline Graph circulant_bipartite(int n, int delta) {
    if (n < 1 || delta < 1 || delta > n) throw std::invalid_argument("need 1 <= delta <= n");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < delta; ++t) g.add_edge(i, n + (i + t) % n);
    return g;
}

// ---------------------------------------------------------------------------
// Exhaustive small-graph catalogs
// ---------------------------------------------------------------------------

namespace detail {

// Minimum edge-mask over all vertex relabelings; a canonical form for
// isomorphism testing on small graphs.
inline uint64_t canonical_code(const Graph& g) {
    std::vector<int> perm(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) perm[static_cast<size_t>(i)] = i;
    uint64_t best = ~0ull;
    do {
        uint64_t code = 0;
        int idx = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j, ++idx)
                if (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                    code |= uint64_t(1) << idx;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph graph_from_code(int n, uint64_t code) {
    Graph g(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if ((code >> idx) & 1u) g.add_edge(i, j);
    return g;
}

}  // namespace detail

// All connected graphs with exactly n vertices, one per isomorphism class.
// Built by repeatedly attaching a new vertex to every nonempty subset of a
// smaller connected graph (every connected graph has a removable non-cut
// vertex, so this reaches every class).
inline std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("connected catalog supports 1 <= n <= 7");
    std::vector<uint64_t> level = {0};  // K1
    for (int k = 1; k < n; ++k) {
        std::unordered_set<uint64_t> next;
        for (uint64_t code : level) {
            Graph g = detail::graph_from_code(k, code);
            Graph h(k + 1);
            for (int u = 0; u < k; ++u)
                for (VertexSet t = g.adj[static_cast<size_t>(u)] & ~((bit(u) << 1) - 1); t;) {
                    int v = lowest_vertex(t);
                    t &= t - 1;
                    h.add_edge(u, v);
                }
            for (VertexSet attach = 1; attach < bit(k); ++attach) {
                Graph h2 = h;
                for (VertexSet t = attach; t;) {
                    int v = lowest_vertex(t);
                    t &= t - 1;
                    h2.add_edge(k, v);
                }
                next.insert(detail::canonical_code(h2));
            }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (uint64_t code : level) out.push_back(detail::graph_from_code(n, code));
    return out;
}

// All connected graphs with at most n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<Graph> lvl = connected_graphs(k);
        out.insert(out.end(), lvl.begin(), lvl.end());
    }
    return out;
}

// All connected bipartite graphs with exactly n vertices, enumerated through
// bi-adjacency matrices over side sizes a <= b.  Every isomorphism class
// appears at least once (possibly more than once).
inline std::vector<Graph> connected_bipartite_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("bipartite catalog supports 1 <= n <= 8");
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    for (int a = 1; a <= n / 2; ++a) {
        int b = n - a;
        uint64_t total = uint64_t(1) << (a * b);
        for (uint64_t mask = 0; mask < total; ++mask) {
            Graph g(n);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    if ((mask >> (i * b + j)) & 1u) g.add_edge(i, a + j);
            if (is_connected(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace hardcore
