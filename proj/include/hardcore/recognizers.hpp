#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Forbidden induced patterns
// ---------------------------------------------------------------------------

enum class Pattern { claw, fork, armchair, stirrer, tripod };

inline const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::claw: return "claw";
        case Pattern::fork: return "fork";
        case Pattern::armchair: return "armchair";
        case Pattern::stirrer: return "stirrer";
        case Pattern::tripod: return "tripod";
    }
    throw std::logic_error("unknown pattern");
}

// The five fixed pattern graphs.  claw = K_{1,3} centred at 0; fork = claw
// with one leg extended to length two (pendant 0 on leaf 1, centre 2);
// armchair = a 4-cycle with pendant vertices on three of its four vertices;
// stirrer = two 4-cycles sharing an edge, plus a pendant on one endpoint of
// the shared edge; tripod = three legs of length two joined at centre 0.
inline Graph pattern_graph(Pattern p) {
    auto build = [](int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    };
    switch (p) {
        case Pattern::claw: return build(4, {{0, 1}, {0, 2}, {0, 3}});
        case Pattern::fork: return build(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
        case Pattern::armchair:
            return build(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 2}, {1, 5}});
        case Pattern::stirrer:
            return build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {5, 6}, {6, 2}});
        case Pattern::tripod: return build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    }
    throw std::logic_error("unknown pattern");
}

namespace detail {

struct InducedSearch {
    const Graph& g;
    const Graph& pat;
    std::vector<int> order;       // pattern vertices, connectivity-first
    std::vector<VertexSet> req;   // req[pos]: earlier positions adjacent in pat
    std::vector<int> assign;      // position -> graph vertex
    VertexSet used = 0;

    bool run(size_t pos) {
        if (pos == order.size()) return true;
        int pdeg = pat.degree(order[pos]);
        for (int u = 0; u < g.n; ++u) {
            if ((used >> u) & 1u) continue;
            if (g.degree(u) < pdeg) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                bool want = (req[pos] >> q) & 1u;
                ok = want == g.has_edge(u, assign[q]);
            }
            if (!ok) continue;
            assign[pos] = u;
            used |= bit(u);
            if (run(pos + 1)) return true;
            used &= ~bit(u);
        }
        return false;
    }
};

}  // namespace detail

// First induced embedding of `pat` into g in a deterministic search order, as
// a map pattern vertex -> graph vertex; nullopt when none exists.
inline std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pat) {
    if (pat.n == 0) throw std::invalid_argument("empty pattern");
    if (g.n < pat.n) return std::nullopt;

    // Order pattern vertices breadth-first from a max-degree vertex so each
    // candidate is constrained by earlier assignments as soon as possible.
    std::vector<int> order;
    order.reserve(static_cast<size_t>(pat.n));
    std::vector<char> vis(static_cast<size_t>(pat.n), 0);
    int start = 0;
    for (int v = 1; v < pat.n; ++v)
        if (pat.degree(v) > pat.degree(start)) start = v;
    order.push_back(start);
    vis[static_cast<size_t>(start)] = 1;
    for (size_t h = 0; h < order.size(); ++h) {
        for (int u : set_to_vector(pat.adj[static_cast<size_t>(order[h])]))
            if (!vis[static_cast<size_t>(u)]) {
                vis[static_cast<size_t>(u)] = 1;
                order.push_back(u);
            }
    }
    for (int v = 0; v < pat.n; ++v)
        if (!vis[static_cast<size_t>(v)]) order.push_back(v);

    std::vector<VertexSet> req(static_cast<size_t>(pat.n), 0);
    for (size_t pos = 0; pos < order.size(); ++pos)
        for (size_t q = 0; q < pos; ++q)
            if (pat.has_edge(order[pos], order[q])) req[pos] |= bit(static_cast<int>(q));

    detail::InducedSearch search{g, pat, order, req, std::vector<int>(static_cast<size_t>(pat.n), -1), 0};
    if (!search.run(0)) return std::nullopt;
    std::vector<int> occ(static_cast<size_t>(pat.n), -1);
    for (size_t pos = 0; pos < order.size(); ++pos)
        occ[static_cast<size_t>(order[pos])] = search.assign[pos];
    return occ;
}

// Induced occurrence of the named pattern, labelled as in pattern_graph.
inline std::optional<std::vector<int>> detect_pattern(const Graph& g, Pattern p) {
    if (p == Pattern::claw) {
        // A claw is three pairwise non-adjacent neighbours of one vertex.
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) < 3) continue;
            std::vector<int> nb = set_to_vector(g.adj[static_cast<size_t>(v)]);
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    if (g.has_edge(nb[i], nb[j])) continue;
                    for (size_t k = j + 1; k < nb.size(); ++k)
                        if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
                            return std::vector<int>{v, nb[i], nb[j], nb[k]};
                }
        }
        return std::nullopt;
    }
    return find_induced(g, pattern_graph(p));
}

// ---------------------------------------------------------------------------
// Holes (chordless cycles of length >= 5)
// ---------------------------------------------------------------------------

namespace detail {

struct HoleSearch {
    const Graph& g;
    int anchor;
    std::vector<int> path;
    VertexSet on_path;

    // Extends an induced path from the anchor; interior vertices may touch
    // nothing on the path but their predecessor, and a return edge to the
    // anchor closes a hole once the cycle has length >= 5.
    bool extend() {
        int last = path.back();
        for (int u : set_to_vector(g.adj[static_cast<size_t>(last)])) {
            if (u <= anchor || ((on_path >> u) & 1u)) continue;
            VertexSet chords = g.adj[static_cast<size_t>(u)] & on_path & ~bit(last) & ~bit(anchor);
            if (chords) continue;
            bool to_anchor = (g.adj[static_cast<size_t>(u)] >> anchor) & 1u;
            if (path.size() >= 2 && to_anchor) {
                if (path.size() + 1 >= 5) {
                    path.push_back(u);
                    return true;
                }
                continue;
            }
            path.push_back(u);
            on_path |= bit(u);
            if (extend()) return true;
            on_path &= ~bit(u);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace detail

// A chordless cycle of length >= 5, in cycle order, or nullopt.
inline std::optional<std::vector<int>> find_hole(const Graph& g) {
    for (int a = 0; a < g.n; ++a) {
        detail::HoleSearch s{g, a, {a}, bit(a)};
        if (s.extend()) return s.path;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Biclique statistics
// ---------------------------------------------------------------------------

// Largest d such that K_{d,d} is a subgraph: S and a d-subset of the common
// neighbourhood of S outside S form the two sides; all vertex subsets are
// enumerated.
inline int psi(const Graph& g) {
    if (g.edge_count() == 0) throw std::domain_error("psi needs at least one edge");
    if (g.n > 20) throw std::runtime_error("psi enumeration cap exceeded (n=" + std::to_string(g.n) + ")");
    int best = 0;
    VertexSet total = bit(g.n - 1) << 1;
    for (VertexSet s = 1; s != total; ++s) {
        if (popcount(s) <= best) continue;
        VertexSet common = g.vertices();
        for (VertexSet t = s; t && common;) {
            int v = lowest_vertex(t);
            t &= t - 1;
            common &= g.adj[static_cast<size_t>(v)];
        }
        best = std::max(best, std::min(popcount(s), popcount(common & ~s)));
    }
    return best;
}

namespace detail {

// Maximum independent-set size inside `mask` by branch on the lowest vertex.
inline int alpha_within(const Graph& g, VertexSet mask) {
    if (!mask) return 0;
    int v = lowest_vertex(mask);
    int without = alpha_within(g, mask & ~bit(v));
    int with = 1 + alpha_within(g, mask & ~g.closed_neighborhood(v));
    return std::max(with, without);
}

}  // namespace detail

// Largest d such that K_{d,d} is an induced subgraph (both sides independent,
// all cross edges present); 0 when g has no edge.
inline int psi_induced(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    if (g.n > 20) throw std::runtime_error("psi enumeration cap exceeded (n=" + std::to_string(g.n) + ")");
    int best = 0;
    VertexSet total = bit(g.n - 1) << 1;
    for (VertexSet s = 1; s != total; ++s) {
        if (popcount(s) <= best) continue;
        if (!is_independent(g, s)) continue;
        VertexSet common = g.vertices();
        for (VertexSet t = s; t && common;) {
            int v = lowest_vertex(t);
            t &= t - 1;
            common &= g.adj[static_cast<size_t>(v)];
        }
        common &= ~s;
        if (popcount(common) <= best) continue;
        best = std::max(best, std::min(popcount(s), detail::alpha_within(g, common)));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Staircase orders (monotone graphs)
// ---------------------------------------------------------------------------

struct StaircaseOrders {
    std::vector<int> rows, cols;  // vertex orders of the two sides of a bipartition
};

// True when rows/cols split the vertices into two independent sides and the
// bi-adjacency matrix in these orders avoids the submatrices (11;10), (01;10)
// and (01;11): whenever the anti-diagonal of a 2x2 is all ones, the whole 2x2
// must be ones.
inline bool staircase_ok(const Graph& g, const std::vector<int>& rows, const std::vector<int>& cols) {
    VertexSet rs = 0, cs = 0;
    for (int v : rows) {
        if (v < 0 || v >= g.n || (((rs | cs) >> v) & 1u)) return false;
        rs |= bit(v);
    }
    for (int v : cols) {
        if (v < 0 || v >= g.n || (((rs | cs) >> v) & 1u)) return false;
        cs |= bit(v);
    }
    if ((rs | cs) != g.vertices()) return false;
    for (int v : rows)
        if (g.adj[static_cast<size_t>(v)] & rs) return false;
    for (int v : cols)
        if (g.adj[static_cast<size_t>(v)] & cs) return false;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t k = i + 1; k < rows.size(); ++k)
            for (size_t j = 0; j < cols.size(); ++j)
                for (size_t l = j + 1; l < cols.size(); ++l)
                    if (g.has_edge(rows[i], cols[l]) && g.has_edge(rows[k], cols[j]) &&
                        !(g.has_edge(rows[i], cols[j]) && g.has_edge(rows[k], cols[l])))
                        return false;
    return true;
}

namespace detail {

// With the row order fixed, column type U may precede column type V (as masks
// over row positions) iff every private row of U lies above all of V and
// every private row of V lies below all of U.
inline bool may_precede(VertexSet u, VertexSet v) {
    VertexSet uv = u & ~v, vu = v & ~u;
    if (uv && v && static_cast<int>(std::bit_width(uv)) - 1 >= std::countr_zero(v)) return false;
    if (vu && u && std::countr_zero(vu) <= static_cast<int>(std::bit_width(u)) - 1) return false;
    return true;
}

// Orders the columns for one fixed row order, or nullopt: pairs that admit
// only one relative order form a precedence digraph, and any topological
// order of it works because the constraints are purely pairwise.
inline std::optional<std::vector<int>> complete_columns(const Graph& g, const std::vector<int>& row_list,
                                                        const std::vector<int>& col_vertices) {
    std::vector<VertexSet> types;
    std::vector<std::vector<int>> members;
    for (int cv : col_vertices) {
        VertexSet mask = 0;
        for (size_t p = 0; p < row_list.size(); ++p)
            if (g.has_edge(row_list[p], cv)) mask |= bit(static_cast<int>(p));
        size_t idx = 0;
        while (idx < types.size() && types[idx] != mask) ++idx;
        if (idx == types.size()) {
            types.push_back(mask);
            members.emplace_back();
        }
        members[idx].push_back(cv);
    }
    size_t t = types.size();
    std::vector<VertexSet> succ(t, 0);
    std::vector<int> indeg(t, 0);
    for (size_t x = 0; x < t; ++x)
        for (size_t y = x + 1; y < t; ++y) {
            bool fwd = may_precede(types[x], types[y]);
            bool bwd = may_precede(types[y], types[x]);
            if (!fwd && !bwd) return std::nullopt;
            if (fwd && !bwd) { succ[x] |= bit(static_cast<int>(y)); ++indeg[y]; }
            if (bwd && !fwd) { succ[y] |= bit(static_cast<int>(x)); ++indeg[x]; }
        }
    std::vector<int> out;
    VertexSet done = 0;
    for (size_t step = 0; step < t; ++step) {
        size_t pick = t;
        for (size_t x = 0; x < t; ++x)
            if (!((done >> x) & 1u) && indeg[x] == 0) { pick = x; break; }
        if (pick == t) return std::nullopt;  // precedence cycle
        done |= bit(static_cast<int>(pick));
        for (int y : set_to_vector(succ[pick])) --indeg[static_cast<size_t>(y)];
        out.insert(out.end(), members[pick].begin(), members[pick].end());
    }
    return out;
}

}  // namespace detail

// Staircase orders of a bipartite graph, or nullopt when no row/column orders
// avoid the forbidden submatrices.  Searches row orders per component over
// distinct neighbourhood types (duplicates are interchangeable) and completes
// the columns greedily; components are laid out block-diagonally.
inline std::optional<StaircaseOrders> is_monotone(const Graph& g) {
    if (!bipartition(g)) throw std::invalid_argument("staircase orders need a bipartite graph");
    StaircaseOrders out;
    for (VertexSet comp : components(g)) {
        auto bp = bipartition_within(g, comp);
        VertexSet A = bp->first, B = bp->second;
        if (popcount(A) > popcount(B)) std::swap(A, B);
        std::vector<int> row_vertices = set_to_vector(A);
        std::vector<int> col_vertices = set_to_vector(B);

        std::vector<VertexSet> types;
        std::vector<std::vector<int>> members;
        for (int v : row_vertices) {
            VertexSet nb = g.adj[static_cast<size_t>(v)];
            size_t idx = 0;
            while (idx < types.size() && types[idx] != nb) ++idx;
            if (idx == types.size()) {
                types.push_back(nb);
                members.emplace_back();
            }
            members[idx].push_back(v);
        }
        if (types.size() > 8) throw std::runtime_error("staircase search cap exceeded");

        std::vector<size_t> perm(types.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        bool found = false;
        do {
            std::vector<int> row_list;
            for (size_t idx : perm)
                row_list.insert(row_list.end(), members[idx].begin(), members[idx].end());
            auto col_list = detail::complete_columns(g, row_list, col_vertices);
            if (col_list) {
                out.rows.insert(out.rows.end(), row_list.begin(), row_list.end());
                out.cols.insert(out.cols.end(), col_list->begin(), col_list->end());
                found = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!found) return std::nullopt;
    }
    if (!staircase_ok(g, out.rows, out.cols))
        throw std::logic_error("staircase construction produced invalid orders");
    return out;
}

// ---------------------------------------------------------------------------
// Fork-free bipartite classification
// ---------------------------------------------------------------------------

enum class BipClass { path, even_cycle, bw3_star, cube, biclique_minus_matching, contains_fork };

inline const char* bip_class_name(BipClass c) {
    switch (c) {
        case BipClass::path: return "path";
        case BipClass::even_cycle: return "even_cycle";
        case BipClass::bw3_star: return "bw3_star";
        case BipClass::cube: return "cube";
        case BipClass::biclique_minus_matching: return "biclique_minus_matching";
        case BipClass::contains_fork: return "contains_fork";
    }
    throw std::logic_error("unknown class");
}

struct ForkFreeClassification {
    BipClass label;
    std::vector<int> fork;  // embedding when label == contains_fork
};

namespace detail {

// C6 plus at least one centre adjacent to one alternating triple of the
// cycle: one side is the triple, the other splits into three degree-2 rim
// vertices covering the three distinct pairs, plus the centres.
inline bool is_bw3_star(const Graph& g, VertexSet side_a, VertexSet side_b) {
    for (VertexSet s : {side_a, side_b}) {
        if (popcount(s) != 3) continue;
        VertexSet others = g.vertices() & ~s;
        int hubs = 0;
        std::vector<VertexSet> rim_pairs;
        bool ok = true;
        for (int v : set_to_vector(others)) {
            VertexSet nb = g.adj[static_cast<size_t>(v)];
            if (nb == s) ++hubs;
            else if (popcount(nb) == 2 && (nb & ~s) == 0) rim_pairs.push_back(nb);
            else { ok = false; break; }
        }
        std::sort(rim_pairs.begin(), rim_pairs.end());
        bool distinct = std::adjacent_find(rim_pairs.begin(), rim_pairs.end()) == rim_pairs.end();
        if (ok && hubs >= 1 && rim_pairs.size() == 3 && distinct) return true;
    }
    return false;
}

}  // namespace detail

// Places a connected bipartite graph in one of the five fork-free families or
// reports a fork embedding.
inline ForkFreeClassification classify_forkfree_bipartite(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("classification needs a connected graph");
    auto bp = bipartition(g);
    if (!bp) throw std::invalid_argument("classification needs a bipartite graph");

    if (g.max_degree() <= 2) {
        if (g.edge_count() == g.n - 1) return {BipClass::path, {}};
        return {BipClass::even_cycle, {}};  // connected with all degrees 2
    }
    if (detail::is_bw3_star(g, bp->first, bp->second)) return {BipClass::bw3_star, {}};
    if (g.n == 8 && g.edge_count() == 12 && g.max_degree() == 3) {
        // A connected 3-regular bipartite graph on 8 vertices has sides 4+4
        // and its bipartite complement is a perfect matching, so it is the cube.
        return {BipClass::cube, {}};
    }
    std::vector<std::pair<int, int>> missing;
    for (int a : set_to_vector(bp->first))
        for (int b : set_to_vector(bp->second))
            if (!g.has_edge(a, b)) missing.emplace_back(a, b);
    bool matching = missing.size() <= 2 &&
                    (missing.size() < 2 || (missing[0].first != missing[1].first &&
                                            missing[0].second != missing[1].second));
    if (matching) return {BipClass::biclique_minus_matching, {}};

    auto fork = detect_pattern(g, Pattern::fork);
    if (!fork) throw std::logic_error("connected bipartite graph fits no family yet has no fork");
    return {BipClass::contains_fork, *fork};
}

// ---------------------------------------------------------------------------
// Class report and bipartite-pathwidth upper bounds
// ---------------------------------------------------------------------------

struct ClassReport {
    bool bipartite = false;
    bool claw_free = true;
    bool fork_free = true;
    bool fast = true;  // no armchair, stirrer or tripod
    bool hole_free = true;
    bool monotone = false;
    std::vector<int> claw, fork, armchair, stirrer, tripod, hole;  // witnesses when present
    std::optional<StaircaseOrders> orders;                         // when monotone
    int psi = 0;          // largest biclique subgraph side; 0 when edgeless
    int psi_induced = 0;  // largest induced biclique side; 0 when edgeless
    int delta = 0;        // min degree
    int Delta = 0;        // max degree
    std::optional<int> bpw_bound;
    std::string bound_source;
};

// Class-based upper bound on bipartite pathwidth: claw-free graphs have bpw
// <= 2; fork-free graphs without induced K_{d+1,d+1} have bpw <= max(4, d+2);
// fast graphs without induced K_{d+1,d+1} have bpw <= 4d-1.  The smallest
// applicable bound wins.
inline std::optional<std::pair<int, std::string>> bpw_upper_bound(const ClassReport& r) {
    std::optional<std::pair<int, std::string>> best;
    auto offer = [&](int b, std::string src) {
        if (!best || b < best->first) best = {{b, std::move(src)}};
    };
    int d = std::max(1, r.psi_induced);
    if (r.claw_free) offer(2, "claw-free");
    if (r.fork_free) offer(std::max(4, d + 2), "fork-free (d=" + std::to_string(d) + ")");
    if (r.fast) offer(4 * d - 1, "fast (d=" + std::to_string(d) + ")");
    return best;
}

inline ClassReport class_report(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("class report needs a nonempty graph");
    ClassReport r;
    if (auto w = detect_pattern(g, Pattern::claw)) { r.claw_free = false; r.claw = *w; }
    if (auto w = detect_pattern(g, Pattern::fork)) { r.fork_free = false; r.fork = *w; }
    if (auto w = detect_pattern(g, Pattern::armchair)) { r.fast = false; r.armchair = *w; }
    if (auto w = detect_pattern(g, Pattern::stirrer)) { r.fast = false; r.stirrer = *w; }
    if (auto w = detect_pattern(g, Pattern::tripod)) { r.fast = false; r.tripod = *w; }
    if (r.claw_free && !r.fork_free) throw std::logic_error("claw-free graph reported a fork");
    if (auto h = find_hole(g)) { r.hole_free = false; r.hole = *h; }
    r.bipartite = bipartition(g).has_value();
    if (r.bipartite) {
        r.orders = is_monotone(g);
        r.monotone = r.orders.has_value();
    }
    r.delta = g.n > 0 ? g.degree(0) : 0;
    for (int v = 0; v < g.n; ++v) r.delta = std::min(r.delta, g.degree(v));
    r.Delta = g.max_degree();
    if (g.edge_count() > 0) {
        r.psi = psi(g);
        r.psi_induced = psi_induced(g);
    }
    if (auto b = bpw_upper_bound(r)) {
        r.bpw_bound = b->first;
        r.bound_source = b->second;
    }
    return r;
}

}  // namespace hardcore
