#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardcore {

// Vertex sets are bitmasks over at most 64 vertices.  Everything downstream
// (independent-set enumeration, path decompositions, canonical paths) lives on
// desk-scale instances, so one machine word per set keeps the hot loops cheap.
using VertexSet = uint64_t;

inline VertexSet bit(int v) { return VertexSet(1) << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet(0) : (VertexSet(1) << n) - 1; }

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(lowest_vertex(s));
        s &= s - 1;
    }
    return out;
}

inline VertexSet vector_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

// Ordering on vertex sets: smaller sets first, ties broken by the smallest
// element of the symmetric difference (it belongs to the smaller set).
inline bool set_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    VertexSet d = a ^ b;
    return (d & (~d + 1) & a) != 0;
}

struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;  // adj[v] = open neighborhood of v

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(static_cast<size_t>(n_), 0) {
        if (n_ < 0 || n_ > 64) throw std::invalid_argument("graph must have between 0 and 64 vertices");
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj[static_cast<size_t>(u)] |= bit(v);
        adj[static_cast<size_t>(v)] |= bit(u);
    }

    bool has_edge(int u, int v) const { return (adj[static_cast<size_t>(u)] >> v) & 1u; }
    VertexSet neighbors(int v) const { return adj[static_cast<size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const { return adj[static_cast<size_t>(v)] | bit(v); }
    int degree(int v) const { return popcount(adj[static_cast<size_t>(v)]); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m += degree(v);
        return m / 2;
    }

    VertexSet vertices() const { return full_set(n); }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// S is independent iff no vertex of S sees another vertex of S.
inline bool is_independent(const Graph& g, VertexSet s) {
    for (VertexSet t = s; t;) {
        int v = lowest_vertex(t);
        t &= t - 1;
        if (g.adj[static_cast<size_t>(v)] & s) return false;
    }
    return true;
}

// Neighborhood of a whole set.
inline VertexSet neighborhood_of_set(const Graph& g, VertexSet s) {
    VertexSet out = 0;
    for (VertexSet t = s; t;) {
        int v = lowest_vertex(t);
        t &= t - 1;
        out |= g.adj[static_cast<size_t>(v)];
    }
    return out & ~s;
}

// Connected components of the subgraph induced on `within`, listed with the
// component containing the smallest vertex first.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if (!((within >> v) & 1u) || ((seen >> v) & 1u)) continue;
        VertexSet comp = bit(v), frontier = bit(v);
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet t = frontier; t;) {
                int u = lowest_vertex(t);
                t &= t - 1;
                next |= g.adj[static_cast<size_t>(u)] & within & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return components(g).size() == 1;
}

// Two-colors the subgraph induced on `within` if it is bipartite.  The side
// containing the smallest vertex of each component is placed in `first`.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition_within(const Graph& g, VertexSet within) {
    VertexSet first = 0, second = 0, seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if (!((within >> v) & 1u) || ((seen >> v) & 1u)) continue;
        VertexSet a = bit(v), b = 0, frontier = bit(v);
        bool side = false;  // false: frontier lives in a
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet t = frontier; t;) {
                int u = lowest_vertex(t);
                t &= t - 1;
                next |= g.adj[static_cast<size_t>(u)] & within;
            }
            next &= ~(a | b);
            if (side) a |= next; else b |= next;
            side = !side;
            frontier = next;
        }
        // Check properness: no edge inside a side.
        for (VertexSet t = a; t;) {
            int u = lowest_vertex(t);
            t &= t - 1;
            if (g.adj[static_cast<size_t>(u)] & a) return std::nullopt;
        }
        for (VertexSet t = b; t;) {
            int u = lowest_vertex(t);
            t &= t - 1;
            if (g.adj[static_cast<size_t>(u)] & b) return std::nullopt;
        }
        first |= a;
        second |= b;
        seen |= a | b;
    }
    return std::make_pair(first, second);
}

inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    return bipartition_within(g, g.vertices());
}

// Induced subgraph on `keep`; second element maps new labels to old ones in
// increasing order of the old label.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<int> old_of = set_to_vector(keep);
    std::vector<int> new_of(static_cast<size_t>(g.n), -1);
    for (size_t i = 0; i < old_of.size(); ++i) new_of[static_cast<size_t>(old_of[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(old_of.size()));
    for (size_t i = 0; i < old_of.size(); ++i) {
        VertexSet nb = g.adj[static_cast<size_t>(old_of[i])] & keep;
        for (VertexSet t = nb; t;) {
            int u = lowest_vertex(t);
            t &= t - 1;
            h.adj[i] |= bit(new_of[static_cast<size_t>(u)]);
        }
    }
    return {h, old_of};
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    // perm[old] = new
    Graph h(g.n);
    for (int v = 0; v < g.n; ++v) {
        for (VertexSet t = g.adj[static_cast<size_t>(v)]; t;) {
            int u = lowest_vertex(t);
            t &= t - 1;
            if (u > v) h.add_edge(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(u)]);
        }
    }
    return h;
}

// Twin pairs.  False twins share open neighborhoods (and are non-adjacent);
// true twins share closed neighborhoods (and are adjacent).
inline std::vector<std::pair<int, int>> false_twins(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v) && g.adj[static_cast<size_t>(u)] == g.adj[static_cast<size_t>(v)])
                out.emplace_back(u, v);
    return out;
}

inline std::vector<std::pair<int, int>> true_twins(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) &&
                (g.adj[static_cast<size_t>(u)] | bit(u)) == (g.adj[static_cast<size_t>(v)] | bit(v)))
                out.emplace_back(u, v);
    return out;
}

// Vertex-weighted graph.  Weights are positive integers; weight-0 vertices
// are removed at load time (with a warning) since they can never be occupied.
struct WeightedGraph {
    Graph g;
    std::vector<long long> w;     // weight per (current) vertex
    std::vector<int> labels;      // current vertex -> label in the input file

    WeightedGraph() = default;
    explicit WeightedGraph(Graph graph) : g(std::move(graph)) {
        w.assign(static_cast<size_t>(g.n), 1);
        labels.resize(static_cast<size_t>(g.n));
        for (int v = 0; v < g.n; ++v) labels[static_cast<size_t>(v)] = v;
    }

    bool uniform() const {
        for (long long x : w) if (x != 1) return false;
        return true;
    }

    long long total_weight() const {
        long long s = 0;
        for (long long x : w) s += x;
        return s;
    }
};

struct LoadResult {
    WeightedGraph graph;
    std::vector<std::string> warnings;
};

// Parses the plain-text graph format:
//   line 1:  n
//   line 2:  optional "w w_0 w_1 ... w_{n-1}"
//   rest:    one edge "u v" per line
// '#' starts a comment; blank lines are skipped.  Errors name the offending
// line number.
inline LoadResult load_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int n = -1;
    std::vector<long long> weights;
    std::vector<std::pair<int, int>> edges;
    bool weights_seen = false;
    bool edges_seen = false;

    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank or comment-only

        if (n < 0) {
            try {
                size_t pos = 0;
                n = std::stoi(tok, &pos);
                if (pos != tok.size()) fail("expected vertex count, got '" + tok + "'");
            } catch (const std::invalid_argument&) {
                fail("expected vertex count, got '" + tok + "'");
            }
            if (n < 0) fail("vertex count must be non-negative");
            if (n > 64) fail("at most 64 vertices are supported");
            std::string extra;
            if (ls >> extra) fail("unexpected token '" + extra + "' after vertex count");
            continue;
        }

        if (tok == "w") {
            if (weights_seen) fail("duplicate weight line");
            if (edges_seen) fail("weight line must precede edges");
            weights_seen = true;
            for (int i = 0; i < n; ++i) {
                long long x;
                if (!(ls >> x)) fail("expected " + std::to_string(n) + " weights");
                if (x < 0) fail("weights must be non-negative");
                weights.push_back(x);
            }
            std::string extra;
            if (ls >> extra) fail("too many weights");
            continue;
        }

        edges_seen = true;
        int u = 0, v = 0;
        try {
            size_t pos = 0;
            u = std::stoi(tok, &pos);
            if (pos != tok.size()) fail("expected edge 'u v', got '" + tok + "'");
        } catch (const std::invalid_argument&) {
            fail("expected edge 'u v', got '" + tok + "'");
        }
        if (!(ls >> v)) fail("edge line needs two endpoints");
        std::string extra;
        if (ls >> extra) fail("unexpected token '" + extra + "' on edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) fail("self-loops are not allowed");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing vertex count");

    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    WeightedGraph wg(g);
    if (weights_seen) wg.w = weights;

    LoadResult res;
    VertexSet keep = full_set(n);
    for (int v = 0; v < n; ++v) {
        if (wg.w[static_cast<size_t>(v)] == 0) {
            keep &= ~bit(v);
            res.warnings.push_back("vertex " + std::to_string(v) + " has weight 0 and was removed");
        }
    }
    if (keep != full_set(n)) {
        auto [h, old_of] = induced_subgraph(g, keep);
        WeightedGraph out(h);
        for (size_t i = 0; i < old_of.size(); ++i) {
            out.w[i] = wg.w[static_cast<size_t>(old_of[i])];
            out.labels[i] = old_of[i];
        }
        res.graph = std::move(out);
    } else {
        res.graph = std::move(wg);
    }
    return res;
}

inline std::string graph_to_text(const WeightedGraph& wg) {
    std::ostringstream out;
    out << wg.g.n << "\n";
    if (!wg.uniform()) {
        out << "w";
        for (long long x : wg.w) out << " " << x;
        out << "\n";
    }
    for (int u = 0; u < wg.g.n; ++u)
        for (int v = u + 1; v < wg.g.n; ++v)
            if (wg.g.has_edge(u, v)) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace hardcore
