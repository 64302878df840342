#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"

namespace hardcore {

// ---------------------------------------------------------------------------
// Path decompositions
// ---------------------------------------------------------------------------

struct PathDecomposition {
    std::vector<VertexSet> bags;
    int width = -1;    // max |B_i| - 1
    int length = 0;    // number of bags
    bool good = false; // no consecutive containment either way

    static PathDecomposition from_bags(std::vector<VertexSet> bags) {
        PathDecomposition d;
        d.bags = std::move(bags);
        d.length = static_cast<int>(d.bags.size());
        for (VertexSet b : d.bags) d.width = std::max(d.width, popcount(b) - 1);
        d.good = true;
        for (size_t i = 0; i + 1 < d.bags.size(); ++i) {
            VertexSet a = d.bags[i], b = d.bags[i + 1];
            if ((a & ~b) == 0 || (b & ~a) == 0) d.good = false;
        }
        return d;
    }
};

struct DecompositionCheck {
    bool pass = false;
    bool vertices_covered = false;
    bool edges_covered = false;
    bool intervals_ok = false;
    bool good = false;
    std::string detail;  // first violation, if any
};

// Checks conditions (i) vertex coverage, (ii) edge coverage, (iii) occurrence
// intervals, against the whole vertex set of g.
inline DecompositionCheck validate(const Graph& g, const std::vector<VertexSet>& bags) {
    DecompositionCheck rep;
    VertexSet all = 0;
    for (VertexSet b : bags) all |= b;
    rep.vertices_covered = (all & g.vertices()) == g.vertices();
    if (!rep.vertices_covered) {
        int v = lowest_vertex(g.vertices() & ~all);
        rep.detail = "vertex " + std::to_string(v) + " appears in no bag";
    }

    rep.edges_covered = true;
    for (int u = 0; u < g.n && rep.edges_covered; ++u) {
        for (VertexSet t = g.adj[static_cast<size_t>(u)] & ~((bit(u) << 1) - 1); t;) {
            int v = lowest_vertex(t);
            t &= t - 1;
            bool covered = false;
            for (VertexSet b : bags)
                if (((b >> u) & 1u) && ((b >> v) & 1u)) { covered = true; break; }
            if (!covered) {
                rep.edges_covered = false;
                if (rep.detail.empty())
                    rep.detail = "edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag";
                break;
            }
        }
    }

    rep.intervals_ok = true;
    for (int v = 0; v < g.n; ++v) {
        int first = -1, last = -1;
        for (size_t i = 0; i < bags.size(); ++i) {
            if ((bags[i] >> v) & 1u) {
                if (first < 0) first = static_cast<int>(i);
                last = static_cast<int>(i);
            }
        }
        for (int i = first; first >= 0 && i <= last; ++i) {
            if (!((bags[static_cast<size_t>(i)] >> v) & 1u)) {
                rep.intervals_ok = false;
                if (rep.detail.empty())
                    rep.detail = "vertex " + std::to_string(v) + " missing from bag " +
                                 std::to_string(i) + " inside its interval";
                break;
            }
        }
    }

    rep.good = true;
    for (size_t i = 0; i + 1 < bags.size(); ++i) {
        VertexSet a = bags[i], b = bags[i + 1];
        if ((a & ~b) == 0 || (b & ~a) == 0) rep.good = false;
    }
    rep.pass = rep.vertices_covered && rep.edges_covered && rep.intervals_ok;
    return rep;
}

// Removes bags contained in a consecutive neighbour until none remain.
inline PathDecomposition make_good(std::vector<VertexSet> bags) {
    bool changed = true;
    while (changed && bags.size() > 1) {
        changed = false;
        for (size_t i = 0; i + 1 < bags.size(); ++i) {
            VertexSet a = bags[i], b = bags[i + 1];
            if ((a & ~b) == 0) {          // a subseteq b: drop a
                bags.erase(bags.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            if ((b & ~a) == 0) {          // b subseteq a: drop b
                bags.erase(bags.begin() + static_cast<long>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    return PathDecomposition::from_bags(std::move(bags));
}

// ---------------------------------------------------------------------------
// Exact pathwidth via vertex separation (subset dynamic programming)
// ---------------------------------------------------------------------------

struct PathwidthResult {
    int pathwidth = 0;
    PathDecomposition witness;
};

// Number of vertices in s with a neighbour outside s.
inline int boundary_size(const Graph& g, VertexSet s) {
    int b = 0;
    VertexSet outside = g.vertices() & ~s;
    for (VertexSet t = s; t;) {
        int v = lowest_vertex(t);
        t &= t - 1;
        if (g.adj[static_cast<size_t>(v)] & outside) ++b;
    }
    return b;
}

inline PathwidthResult pathwidth_exact(const Graph& g, int cap = 16) {
    if (g.n > cap) throw std::runtime_error("exact pathwidth cap exceeded (n=" + std::to_string(g.n) +
                                            ", cap=" + std::to_string(cap) + ")");
    PathwidthResult res;
    if (g.n == 0) return res;

    // g_val[S] = min over orderings of S as an elimination prefix of the
    // maximum boundary size seen; the last vertex added is recorded for the
    // witness layout.
    size_t total = size_t(1) << g.n;
    std::vector<uint8_t> g_val(total, 0);
    std::vector<uint8_t> last(total, 0);
    for (VertexSet s = 1; s < total; ++s) {
        int bs = boundary_size(g, s);
        int best = 255, best_v = -1;
        for (VertexSet t = s; t;) {
            int v = lowest_vertex(t);
            t &= t - 1;
            int prev = g_val[s & ~bit(v)];
            if (prev < best) { best = prev; best_v = v; }
        }
        g_val[s] = static_cast<uint8_t>(std::max(best, bs));
        last[s] = static_cast<uint8_t>(best_v);
    }
    res.pathwidth = g_val[total - 1];

    // Reconstruct the layout back-to-front, then build bags
    // B_i = boundary(prefix before v_i) plus v_i.
    std::vector<int> order(static_cast<size_t>(g.n));
    VertexSet s = g.vertices();
    for (int i = g.n - 1; i >= 0; --i) {
        int v = last[s];
        order[static_cast<size_t>(i)] = v;
        s &= ~bit(v);
    }
    std::vector<VertexSet> bags;
    VertexSet prefix = 0;
    for (int v : order) {
        VertexSet bag = bit(v);
        VertexSet outside = g.vertices() & ~prefix;
        for (VertexSet t = prefix; t;) {
            int u = lowest_vertex(t);
            t &= t - 1;
            if (g.adj[static_cast<size_t>(u)] & outside) bag |= bit(u);
        }
        bags.push_back(bag);
        prefix |= bit(v);
    }
    res.witness = make_good(std::move(bags));
    return res;
}

struct BipartitePathwidthResult {
    int bpw = 0;
    VertexSet witness = 0;  // vertex set of an induced bipartite subgraph attaining bpw
};

inline BipartitePathwidthResult bipartite_pathwidth_exact(const Graph& g, int cap = 12) {
    if (g.n > cap) throw std::runtime_error("exact bipartite pathwidth cap exceeded (n=" +
                                            std::to_string(g.n) + ", cap=" + std::to_string(cap) + ")");
    BipartitePathwidthResult res;
    if (g.n == 0) return res;
    res.witness = bit(0);
    size_t total = size_t(1) << g.n;
    for (VertexSet s = 1; s < total; ++s) {
        if (popcount(s) - 1 <= res.bpw) continue;  // cannot beat current best
        if (!bipartition_within(g, s)) continue;
        auto [h, old_of] = induced_subgraph(g, s);
        int pw = pathwidth_exact(h, cap).pathwidth;
        if (pw > res.bpw) {
            res.bpw = pw;
            res.witness = s;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Lexicographically-least good decomposition within a width cap
// ---------------------------------------------------------------------------

namespace detail {

struct PrefixKey {
    VertexSet seen;
    VertexSet bag;
    int remaining;
    bool operator==(const PrefixKey&) const = default;
};

struct PrefixKeyHash {
    size_t operator()(const PrefixKey& k) const {
        uint64_t z = k.seen * 0x9e3779b97f4a7c15ULL;
        z ^= k.bag + 0xbf58476d1ce4e5b9ULL + (z << 6) + (z >> 2);
        z ^= static_cast<uint64_t>(k.remaining) + 0x94d049bb133111ebULL + (z << 6) + (z >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return static_cast<size_t>(z ^ (z >> 31));
    }
};

// Enumerates the legal next bags from prefix state (seen, bag):
//  - a dropped vertex must have all its neighbours already seen,
//  - no vertex that was seen and dropped may reappear,
//  - bag size at most cap_size, and consecutive bags must be incomparable.
inline std::vector<VertexSet> bag_candidates(const Graph& g, VertexSet verts, VertexSet seen,
                                             VertexSet bag, int cap_size) {
    std::vector<VertexSet> out;
    if (!seen) {
        // First bag: any nonempty subset within the size cap.
        for (VertexSet sub = verts;; sub = (sub - 1) & verts) {
            if (sub && popcount(sub) <= cap_size) out.push_back(sub);
            if (!sub) break;
        }
    } else {
        VertexSet forced = 0;
        for (VertexSet t = bag; t;) {
            int v = lowest_vertex(t);
            t &= t - 1;
            if (g.adj[static_cast<size_t>(v)] & verts & ~seen) forced |= bit(v);
        }
        int room = cap_size - popcount(forced);
        if (room < 0) return out;
        VertexSet optional = (bag & ~forced) | (verts & ~seen);
        for (VertexSet sub = optional;; sub = (sub - 1) & optional) {
            if (popcount(sub) <= room) {
                VertexSet c = forced | sub;
                if (c && (bag & ~c) && (c & ~bag)) out.push_back(c);
            }
            if (!sub) break;
        }
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

struct LexSearch {
    const Graph& g;
    VertexSet verts;
    int cap_size;
    std::unordered_map<PrefixKey, bool, PrefixKeyHash> memo;
    size_t memo_cap = size_t(1) << 23;

    // Can (seen, bag) be completed with exactly `remaining` more bags?
    bool feasible(VertexSet seen, VertexSet bag, int remaining) {
        if (remaining == 0) return seen == verts;
        int rem_vertices = popcount(verts & ~seen);
        if (rem_vertices < remaining || rem_vertices > remaining * cap_size) return false;
        PrefixKey key{seen, bag, remaining};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (memo.size() >= memo_cap) throw std::runtime_error("lex-least decomposition search exceeded memory cap");
        bool ok = false;
        for (VertexSet c : bag_candidates(g, verts, seen, bag, cap_size)) {
            if (feasible(seen | c, c, remaining - 1)) { ok = true; break; }
        }
        memo.emplace(key, ok);
        return ok;
    }
};

}  // namespace detail

// Minimum good decomposition of a connected graph under the order: fewer bags
// first, then first-differing-bag comparison with sets ordered by size then
// smallest symmetric-difference element.  Only decompositions of width at
// most width_cap are considered.
inline PathDecomposition lex_least_good(const Graph& g, int width_cap) {
    if (g.n == 0) throw std::invalid_argument("lex-least decomposition needs a nonempty graph");
    if (!is_connected(g)) throw std::invalid_argument("lex-least decomposition needs a connected graph");
    if (width_cap < 0) throw std::invalid_argument("width cap must be nonnegative");

    detail::LexSearch search{g, g.vertices(), width_cap + 1, {}, size_t(1) << 23};
    int r_min = -1;
    for (int r = 1; r <= g.n; ++r) {
        if (search.feasible(0, 0, r)) { r_min = r; break; }
    }
    if (r_min < 0) throw std::runtime_error("no good path decomposition within width cap");

    std::vector<VertexSet> bags;
    VertexSet seen = 0, bag = 0;
    for (int remaining = r_min; remaining > 0; --remaining) {
        for (VertexSet c : detail::bag_candidates(g, search.verts, seen, bag, search.cap_size)) {
            if (search.feasible(seen | c, c, remaining - 1)) {
                bags.push_back(c);
                seen |= c;
                bag = c;
                break;
            }
        }
    }
    if (seen != g.vertices()) throw std::runtime_error("lex-least reconstruction failed");
    return PathDecomposition::from_bags(std::move(bags));
}

// ---------------------------------------------------------------------------
// Constructive decompositions for staircase-ordered bipartite graphs
// ---------------------------------------------------------------------------

// Slides a d x d window over the staircase-ordered bi-adjacency matrix from
// top-left to bottom-right, moving right or down one unit per step.  rows and
// cols are the staircase orders of the two sides.
inline PathDecomposition monotone_window_decomposition(const Graph& g, const std::vector<int>& rows,
                                                       const std::vector<int>& cols, int d) {
    int nr = static_cast<int>(rows.size()), nc = static_cast<int>(cols.size());
    if (d < 1) throw std::invalid_argument("window size must be at least 1");
    if (d > nr || d > nc) throw std::invalid_argument("window size exceeds a side of the bipartition");
    auto window_bag = [&](int i, int j) {
        VertexSet b = 0;
        for (int x = 0; x < d; ++x) b |= bit(rows[static_cast<size_t>(i + x)]);
        for (int x = 0; x < d; ++x) b |= bit(cols[static_cast<size_t>(j + x)]);
        return b;
    };
    std::vector<VertexSet> bags;
    int i = 0, j = 0;
    for (;;) {
        bags.push_back(window_bag(i, j));
        bool can_right = j + d < nc, can_down = i + d < nr;
        bool force_right = can_right && g.has_edge(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j + d)]);
        bool force_down = can_down && g.has_edge(rows[static_cast<size_t>(i + d)], cols[static_cast<size_t>(j)]);
        if (force_right && force_down)
            throw std::runtime_error("window forced both right and down: the orders admit a " +
                                     std::to_string(d + 1) + "x" + std::to_string(d + 1) +
                                     " complete bipartite subgraph");
        if (force_right) ++j;
        else if (force_down) ++i;
        else if (can_right) ++j;
        else if (can_down) ++i;
        else break;
    }
    return PathDecomposition::from_bags(std::move(bags));
}

// Bags are the closed neighbourhoods of the side with smaller maximum degree,
// taken in staircase order.
inline PathDecomposition degree_bound_decomposition(const Graph& g, const std::vector<int>& rows,
                                                    const std::vector<int>& cols) {
    auto max_deg = [&](const std::vector<int>& side) {
        int d = 0;
        for (int v : side) d = std::max(d, g.degree(v));
        return d;
    };
    const std::vector<int>& side = max_deg(rows) <= max_deg(cols) ? rows : cols;
    std::vector<VertexSet> bags;
    for (int v : side) bags.push_back(g.closed_neighborhood(v));
    return PathDecomposition::from_bags(std::move(bags));
}

}  // namespace hardcore
