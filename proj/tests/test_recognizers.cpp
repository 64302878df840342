#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "hardcore/catalog.hpp"
#include "hardcore/independence.hpp"
#include "hardcore/pathdecomp.hpp"
#include "hardcore/recognizers.hpp"

using namespace hardcore;

namespace {

// occ must map pattern vertices to distinct graph vertices preserving both
// edges and non-edges.
void check_embedding(const Graph& g, const Graph& pat, const std::vector<int>& occ) {
    REQUIRE(occ.size() == static_cast<size_t>(pat.n));
    VertexSet seen = 0;
    for (int v : occ) {
        REQUIRE(v >= 0);
        REQUIRE(v < g.n);
        REQUIRE_FALSE((seen >> v) & 1u);
        seen |= bit(v);
    }
    for (int i = 0; i < pat.n; ++i)
        for (int j = i + 1; j < pat.n; ++j)
            CHECK(pat.has_edge(i, j) == g.has_edge(occ[static_cast<size_t>(i)], occ[static_cast<size_t>(j)]));
}

void check_hole(const Graph& g, const std::vector<int>& cyc) {
    size_t m = cyc.size();
    REQUIRE(m >= 5);
    VertexSet seen = 0;
    for (int v : cyc) {
        REQUIRE_FALSE((seen >> v) & 1u);
        seen |= bit(v);
    }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            CHECK(g.has_edge(cyc[i], cyc[j]) == consecutive);
        }
}

std::vector<int> degseq(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// Exhaustive staircase-order search over both side assignments of a
// connected bipartite graph; independent of the production search.
bool brute_monotone_connected(const Graph& g) {
    auto bp = bipartition(g);
    REQUIRE(bp.has_value());
    std::vector<int> a = set_to_vector(bp->first), b = set_to_vector(bp->second);
    for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> rows = flip ? b : a;
        std::vector<int> cols = flip ? a : b;
        std::sort(rows.begin(), rows.end());
        do {
            std::vector<int> cc = cols;
            std::sort(cc.begin(), cc.end());
            do {
                if (staircase_ok(g, rows, cc)) return true;
            } while (std::next_permutation(cc.begin(), cc.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
    return false;
}

// Three legs of lengths 2, 2, 1 joined at vertex 0.
Graph spider221() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(0, 5);
    return g;
}

// Interval graph (realizable by intervals on a line) containing a claw at
// vertex 0 and a fork on {2,1,0,3,7}; chordal, so it has no hole and no
// induced 4-cycle.
Graph interval_example() {
    Graph g(8);
    for (auto [u, v] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 3}, {0, 4},
                        {1, 4}, {1, 5}, {2, 5}, {2, 6}, {0, 7}})
        g.add_edge(u, v);
    return g;
}

// Square of P5: vertices 0..4 adjacent when |i-j| <= 2; a claw-free unit
// interval graph.
Graph unit_interval_example() {
    Graph g(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (j - i <= 2) g.add_edge(i, j);
    return g;
}

std::vector<Graph> bipartite_catalog_up_to(int n) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        auto lvl = connected_bipartite_graphs(k);
        out.insert(out.end(), lvl.begin(), lvl.end());
    }
    return out;
}

bool is_fast(const Graph& g) {
    return !detect_pattern(g, Pattern::armchair) && !detect_pattern(g, Pattern::stirrer) &&
           !detect_pattern(g, Pattern::tripod);
}

}  // namespace

TEST_CASE("pattern graphs have the expected shapes and contain themselves") {
    struct Expect {
        Pattern p;
        int n, m;
        std::vector<int> degs;
    };
    std::vector<Expect> table = {
        {Pattern::claw, 4, 3, {1, 1, 1, 3}},
        {Pattern::fork, 5, 4, {1, 1, 1, 2, 3}},
        {Pattern::armchair, 7, 7, {1, 1, 1, 2, 3, 3, 3}},
        {Pattern::stirrer, 7, 8, {1, 2, 2, 2, 2, 3, 4}},
        {Pattern::tripod, 7, 6, {1, 1, 1, 2, 2, 2, 3}},
    };
    for (const auto& e : table) {
        Graph pat = pattern_graph(e.p);
        INFO(pattern_name(e.p));
        CHECK(pat.n == e.n);
        CHECK(pat.edge_count() == e.m);
        CHECK(degseq(pat) == e.degs);
        auto occ = detect_pattern(pat, e.p);
        REQUIRE(occ.has_value());
        check_embedding(pat, pat, *occ);
        // Relabelled copy to exercise the search away from the identity.
        std::vector<int> perm(static_cast<size_t>(pat.n));
        for (int v = 0; v < pat.n; ++v) perm[static_cast<size_t>(v)] = pat.n - 1 - v;
        Graph rel = relabel(pat, perm);
        auto occ2 = detect_pattern(rel, e.p);
        REQUIRE(occ2.has_value());
        check_embedding(rel, pattern_graph(e.p), *occ2);
    }
}

TEST_CASE("claw detection") {
    auto c = detect_pattern(star_graph(3), Pattern::claw);
    REQUIRE(c.has_value());
    check_embedding(star_graph(3), pattern_graph(Pattern::claw), *c);

    CHECK_FALSE(detect_pattern(cycle_graph(6), Pattern::claw).has_value());
    CHECK_FALSE(detect_pattern(complete_graph(4), Pattern::claw).has_value());
    // Line graphs are always claw-free.
    CHECK_FALSE(detect_pattern(line_of_k4(), Pattern::claw).has_value());
    CHECK_FALSE(detect_pattern(line_of_k33(), Pattern::claw).has_value());

    auto f = detect_pattern(fig1_graph(), Pattern::claw);
    REQUIRE(f.has_value());
    check_embedding(fig1_graph(), pattern_graph(Pattern::claw), *f);

    // The specialised claw scan agrees with the generic induced search.
    for (const Graph& g : connected_graphs_up_to(6)) {
        bool fast_path = detect_pattern(g, Pattern::claw).has_value();
        bool generic = find_induced(g, pattern_graph(Pattern::claw)).has_value();
        CHECK(fast_path == generic);
    }
}

TEST_CASE("fork detection and the claw-fork implication") {
    CHECK_FALSE(detect_pattern(path_graph(5), Pattern::fork).has_value());
    auto f = detect_pattern(spider221(), Pattern::fork);
    REQUIRE(f.has_value());
    check_embedding(spider221(), pattern_graph(Pattern::fork), *f);

    // A fork contains a claw, so claw-free implies fork-free.
    for (const Graph& g : connected_graphs_up_to(6)) {
        if (detect_pattern(g, Pattern::fork).has_value())
            CHECK(detect_pattern(g, Pattern::claw).has_value());
    }
}

TEST_CASE("armchair, stirrer and tripod detection") {
    auto tri = detect_pattern(pattern_graph(Pattern::tripod), Pattern::tripod);
    REQUIRE(tri.has_value());  // spider with three legs of length two

    CHECK_FALSE(detect_pattern(star_graph(3), Pattern::tripod).has_value());
    CHECK_FALSE(detect_pattern(spider221(), Pattern::tripod).has_value());
    CHECK(is_fast(cube_graph()));
    CHECK(is_fast(interval_example()));
    CHECK(is_fast(cycle_graph(8)));
    CHECK_FALSE(is_fast(pattern_graph(Pattern::armchair)));
    CHECK_FALSE(is_fast(pattern_graph(Pattern::stirrer)));

    // Patterns are still found when padded with an isolated vertex.
    for (Pattern p : {Pattern::armchair, Pattern::stirrer, Pattern::tripod}) {
        Graph padded = disjoint_union({pattern_graph(p), Graph(1)});
        auto occ = detect_pattern(padded, p);
        REQUIRE(occ.has_value());
        check_embedding(padded, pattern_graph(p), *occ);
    }
}

TEST_CASE("hole search on cycles and chordal graphs") {
    for (int n = 5; n <= 8; ++n) {
        auto h = find_hole(cycle_graph(n));
        REQUIRE(h.has_value());
        CHECK(h->size() == static_cast<size_t>(n));
        check_hole(cycle_graph(n), *h);
    }
    CHECK_FALSE(find_hole(cycle_graph(4)).has_value());
    CHECK_FALSE(find_hole(complete_graph(5)).has_value());
    CHECK_FALSE(find_hole(path_graph(8)).has_value());
    CHECK_FALSE(find_hole(interval_example()).has_value());
    CHECK_FALSE(find_hole(star_graph(4)).has_value());

    auto h = find_hole(fig1_graph());  // e.g. 0-1-2-7-9-3-0 is a 6-hole
    REQUIRE(h.has_value());
    check_hole(fig1_graph(), *h);
}

TEST_CASE("removing a closed neighbourhood from a fast bipartite graph leaves no hole") {
    std::vector<Graph> pool = bipartite_catalog_up_to(7);
    pool.push_back(cycle_graph(8));
    pool.push_back(cube_graph());
    pool.push_back(bw3_star(1));
    pool.push_back(bw3_star(2));
    pool.push_back(circulant_bipartite(4, 2));
    pool.push_back(circulant_bipartite(6, 4));
    for (const Graph& g : pool) {
        if (!is_fast(g)) continue;
        for (int w = 0; w < g.n; ++w) {
            VertexSet keep = g.vertices() & ~g.adj[static_cast<size_t>(w)];
            auto [h, old_of] = induced_subgraph(g, keep);
            CHECK_FALSE(find_hole(h).has_value());
        }
    }
}

TEST_CASE("biclique numbers") {
    CHECK(psi(complete_bipartite(3, 3)) == 3);
    CHECK(psi(complete_bipartite(2, 3)) == 2);
    CHECK(psi(cycle_graph(6)) == 1);
    CHECK(psi(cycle_graph(8)) == 1);
    CHECK(psi(complete_graph(5)) == 2);
    CHECK(psi(path_graph(2)) == 1);
    CHECK(psi(star_graph(3)) == 1);
    CHECK(psi(p4_blowup(2)) == 2);
    CHECK(psi(interval_example()) == 1);
    CHECK_THROWS_AS(psi(Graph(3)), std::domain_error);
    {
        Graph big(21);
        big.add_edge(0, 1);
        CHECK_THROWS_AS(psi(big), std::runtime_error);
    }

    CHECK(psi_induced(Graph(3)) == 0);
    CHECK(psi_induced(complete_graph(5)) == 1);
    CHECK(psi_induced(cube_graph()) == 2);
    CHECK(psi_induced(p4_blowup(2)) == 2);
    CHECK(psi_induced(interval_example()) == 1);

    // Circulant construction with degree delta: largest balanced biclique
    // side is floor(delta/2) for even delta.
    CHECK(psi(circulant_bipartite(4, 2)) == 1);
    CHECK(psi(circulant_bipartite(6, 4)) == 2);

    // In bipartite graphs every biclique subgraph is induced on its sides,
    // so the two statistics agree.
    for (const Graph& g : bipartite_catalog_up_to(6))
        if (g.edge_count() > 0) CHECK(psi(g) == psi_induced(g));

    // Min degree is at most twice the biclique number for fast bipartite graphs.
    std::vector<Graph> pool = bipartite_catalog_up_to(7);
    pool.push_back(cube_graph());
    pool.push_back(circulant_bipartite(6, 4));
    for (const Graph& g : pool) {
        if (g.edge_count() == 0 || !is_fast(g)) continue;
        int delta = g.degree(0);
        for (int v = 0; v < g.n; ++v) delta = std::min(delta, g.degree(v));
        CHECK(delta <= 2 * psi(g));
    }
}

TEST_CASE("staircase order checks") {
    // All-ones bi-adjacency: any orders work.
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) {
            Graph g = complete_bipartite(a, b);
            auto so = is_monotone(g);
            REQUIRE(so.has_value());
            CHECK(staircase_ok(g, so->rows, so->cols));
        }

    for (const Graph& g : {path_graph(4), path_graph(5), complete_bipartite(2, 3)}) {
        auto so = is_monotone(g);
        REQUIRE(so.has_value());
        CHECK(staircase_ok(g, so->rows, so->cols));
    }

    // Orders must cover all vertices with independent sides.
    Graph p4 = path_graph(4);
    CHECK_FALSE(staircase_ok(p4, {0, 2}, {1}));          // vertex 3 missing
    CHECK_FALSE(staircase_ok(p4, {0, 1}, {2, 3}));       // sides not independent
    CHECK((staircase_ok(p4, {0, 2}, {1, 3}) || staircase_ok(p4, {2, 0}, {1, 3}) ||
           staircase_ok(p4, {0, 2}, {3, 1}) || staircase_ok(p4, {2, 0}, {3, 1})));

    // The 6-cycle admits no staircase orders: each side has three vertices
    // whose neighbourhoods are the three distinct pairs of the other side,
    // and some forbidden 2x2 survives every arrangement.
    CHECK_FALSE(is_monotone(cycle_graph(6)).has_value());
    CHECK_FALSE(brute_monotone_connected(cycle_graph(6)));
    CHECK_FALSE(is_monotone(cycle_graph(8)).has_value());
    CHECK_FALSE(brute_monotone_connected(cycle_graph(8)));
    CHECK_FALSE(is_monotone(pattern_graph(Pattern::tripod)).has_value());
    CHECK_FALSE(brute_monotone_connected(pattern_graph(Pattern::tripod)));
    CHECK_FALSE(is_monotone(cube_graph()).has_value());
    CHECK_FALSE(brute_monotone_connected(cube_graph()));
    CHECK_FALSE(is_monotone(bw3_star(1)).has_value());
    CHECK_FALSE(brute_monotone_connected(bw3_star(1)));

    CHECK_THROWS_AS(is_monotone(complete_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(is_monotone(cycle_graph(5)), std::invalid_argument);

    // Disconnected graphs: blocks may be laid out one after another, and a
    // single bad component spoils the whole graph.
    CHECK(is_monotone(disjoint_union({path_graph(3), path_graph(2)})).has_value());
    CHECK_FALSE(is_monotone(disjoint_union({cycle_graph(6), Graph(1)})).has_value());

    // Production search agrees with exhaustive order enumeration.
    for (const Graph& g : bipartite_catalog_up_to(7))
        CHECK(is_monotone(g).has_value() == brute_monotone_connected(g));

    // Hole-free fast bipartite graphs always admit staircase orders.
    for (const Graph& g : bipartite_catalog_up_to(7)) {
        if (!is_fast(g) || find_hole(g).has_value()) continue;
        CHECK(is_monotone(g).has_value());
    }
}

TEST_CASE("window and degree decompositions from staircase orders") {
    // Whole matrix in one window.
    Graph k33 = complete_bipartite(3, 3);
    auto so = is_monotone(k33);
    REQUIRE(so.has_value());
    PathDecomposition win = monotone_window_decomposition(k33, so->rows, so->cols, 3);
    CHECK(win.width == 5);
    CHECK(validate(k33, win.bags).pass);
    // A 2x2 window is forced both ways somewhere inside an all-ones matrix.
    CHECK_THROWS_AS(monotone_window_decomposition(k33, so->rows, so->cols, 2), std::runtime_error);
    CHECK_THROWS_AS(monotone_window_decomposition(k33, so->rows, so->cols, 0), std::invalid_argument);
    CHECK_THROWS_AS(monotone_window_decomposition(k33, so->rows, so->cols, 4), std::invalid_argument);

    Graph k22 = complete_bipartite(2, 2);
    auto so22 = is_monotone(k22);
    REQUIRE(so22.has_value());
    CHECK_THROWS_AS(monotone_window_decomposition(k22, so22->rows, so22->cols, 1), std::runtime_error);

    // Path with an isolated vertex: drop the closed neighbourhood of a
    // vertex of the 8-cycle.
    Graph c8 = cycle_graph(8);
    auto [rem, old_of] = induced_subgraph(c8, c8.vertices() & ~c8.adj[0]);
    REQUIRE_FALSE(find_hole(rem).has_value());
    auto sor = is_monotone(rem);
    REQUIRE(sor.has_value());
    PathDecomposition wrem = monotone_window_decomposition(rem, sor->rows, sor->cols, 1);
    CHECK(wrem.width <= 1);
    CHECK(validate(rem, wrem.bags).pass);

    // Degree-based bags pick the side with smaller maximum degree.
    Graph star = star_graph(4);
    auto sos = is_monotone(star);
    REQUIRE(sos.has_value());
    PathDecomposition dstar = degree_bound_decomposition(star, sos->rows, sos->cols);
    CHECK(dstar.width == 1);
    CHECK(validate(star, dstar.bags).pass);

    Graph k23 = complete_bipartite(2, 3);
    auto so23 = is_monotone(k23);
    REQUIRE(so23.has_value());
    PathDecomposition d23 = degree_bound_decomposition(k23, so23->rows, so23->cols);
    CHECK(d23.width == 2);
    CHECK(validate(k23, d23.bags).pass);

    // Sweep: for every connected bipartite graph with staircase orders, the
    // window of size psi yields a valid decomposition of width <= 2 psi - 1,
    // and the degree-based one stays within the smaller maximum degree.
    for (const Graph& g : bipartite_catalog_up_to(7)) {
        if (g.edge_count() == 0) continue;
        auto orders = is_monotone(g);
        if (!orders) continue;
        int d = psi(g);
        PathDecomposition w = monotone_window_decomposition(g, orders->rows, orders->cols, d);
        CHECK(validate(g, w.bags).pass);
        CHECK(w.width <= 2 * d - 1);

        auto max_deg = [&](const std::vector<int>& side) {
            int m = 0;
            for (int v : side) m = std::max(m, g.degree(v));
            return m;
        };
        PathDecomposition dd = degree_bound_decomposition(g, orders->rows, orders->cols);
        CHECK(validate(g, dd.bags).pass);
        CHECK(dd.width <= std::min(max_deg(orders->rows), max_deg(orders->cols)));
    }
}

TEST_CASE("fork-free bipartite classification") {
    CHECK(classify_forkfree_bipartite(path_graph(1)).label == BipClass::path);
    CHECK(classify_forkfree_bipartite(path_graph(2)).label == BipClass::path);
    CHECK(classify_forkfree_bipartite(path_graph(9)).label == BipClass::path);
    CHECK(classify_forkfree_bipartite(cycle_graph(4)).label == BipClass::even_cycle);
    CHECK(classify_forkfree_bipartite(cycle_graph(6)).label == BipClass::even_cycle);
    CHECK(classify_forkfree_bipartite(cycle_graph(8)).label == BipClass::even_cycle);
    CHECK(classify_forkfree_bipartite(bw3_star(1)).label == BipClass::bw3_star);
    CHECK(classify_forkfree_bipartite(bw3_star(3)).label == BipClass::bw3_star);
    CHECK(classify_forkfree_bipartite(cube_graph()).label == BipClass::cube);
    CHECK(classify_forkfree_bipartite(complete_bipartite(3, 3)).label ==
          BipClass::biclique_minus_matching);
    CHECK(classify_forkfree_bipartite(star_graph(5)).label == BipClass::biclique_minus_matching);

    // K_{3,3} with one, then two, matching cross pairs removed.
    auto near_biclique = [](int drop) {
        Graph g(6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!(i == j && i < drop)) g.add_edge(i, 3 + j);
        return g;
    };
    CHECK(classify_forkfree_bipartite(near_biclique(1)).label == BipClass::biclique_minus_matching);
    CHECK(classify_forkfree_bipartite(near_biclique(2)).label == BipClass::biclique_minus_matching);

    auto res = classify_forkfree_bipartite(spider221());
    CHECK(res.label == BipClass::contains_fork);
    check_embedding(spider221(), pattern_graph(Pattern::fork), res.fork);

    CHECK_THROWS_AS(classify_forkfree_bipartite(disjoint_union({path_graph(2), path_graph(2)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_forkfree_bipartite(complete_graph(3)), std::invalid_argument);

    // A family label is assigned exactly when no fork is present.
    for (const Graph& g : bipartite_catalog_up_to(6)) {
        auto r = classify_forkfree_bipartite(g);
        bool has_fork = detect_pattern(g, Pattern::fork).has_value();
        CHECK((r.label == BipClass::contains_fork) == has_fork);
        if (r.label == BipClass::contains_fork)
            check_embedding(g, pattern_graph(Pattern::fork), r.fork);
    }
}

TEST_CASE("class reports and pathwidth bounds for bipartite subgraphs") {
    ClassReport c5 = class_report(cycle_graph(5));
    CHECK(c5.claw_free);
    CHECK_FALSE(c5.bipartite);
    REQUIRE(c5.bpw_bound.has_value());
    CHECK(*c5.bpw_bound == 2);
    CHECK(c5.bound_source == "claw-free");

    ClassReport q3 = class_report(cube_graph());
    CHECK_FALSE(q3.claw_free);
    CHECK(q3.fork_free);
    CHECK(q3.fast);
    CHECK(q3.psi_induced == 2);
    REQUIRE(q3.bpw_bound.has_value());
    CHECK(*q3.bpw_bound == 4);
    CHECK(q3.bound_source == "fork-free (d=2)");

    ClassReport k33 = class_report(complete_bipartite(3, 3));
    REQUIRE(k33.bpw_bound.has_value());
    CHECK(*k33.bpw_bound == 5);
    CHECK(k33.bound_source == "fork-free (d=3)");

    ClassReport c6 = class_report(cycle_graph(6));
    CHECK(c6.claw_free);
    CHECK(c6.bipartite);
    CHECK_FALSE(c6.monotone);
    CHECK_FALSE(c6.hole_free);
    REQUIRE(c6.bpw_bound.has_value());
    CHECK(*c6.bpw_bound == 2);

    for (const Graph& g : {line_of_k4(), line_of_k33()}) {
        ClassReport r = class_report(g);
        CHECK(r.claw_free);
        REQUIRE(r.bpw_bound.has_value());
        CHECK(*r.bpw_bound == 2);
        CHECK(bipartite_pathwidth_exact(g).bpw == 2);
    }

    // Interval graph with a claw: only the fast rule applies, giving 3,
    // while the true bipartite pathwidth is at most 2.
    ClassReport iv = class_report(interval_example());
    CHECK_FALSE(iv.claw_free);
    CHECK_FALSE(iv.fork_free);
    CHECK(iv.fast);
    CHECK(iv.hole_free);
    CHECK(iv.psi == 1);
    CHECK(iv.psi_induced == 1);
    REQUIRE(iv.bpw_bound.has_value());
    CHECK(*iv.bpw_bound == 3);
    CHECK(iv.bound_source == "fast (d=1)");
    int iv_exact = bipartite_pathwidth_exact(interval_example()).bpw;
    CHECK(iv_exact <= 2);
    CHECK(*iv.bpw_bound >= iv_exact);

    // Claw-free unit interval graph: bound 2, exact value 1 (its bipartite
    // induced subgraphs are disjoint unions of paths).
    ClassReport ui = class_report(unit_interval_example());
    CHECK(ui.claw_free);
    REQUIRE(ui.bpw_bound.has_value());
    CHECK(*ui.bpw_bound == 2);
    CHECK(bipartite_pathwidth_exact(unit_interval_example()).bpw == 1);

    // Claw, fork, stirrer and tripod all present: no rule applies.
    Graph mixed = disjoint_union({pattern_graph(Pattern::stirrer), pattern_graph(Pattern::tripod)});
    ClassReport rm = class_report(mixed);
    CHECK_FALSE(rm.claw_free);
    CHECK_FALSE(rm.fork_free);
    CHECK_FALSE(rm.fast);
    CHECK_FALSE(rm.bpw_bound.has_value());

    CHECK_THROWS_AS(class_report(Graph(0)), std::invalid_argument);

    // Soundness sweep: the class bound never undercuts the exact value.
    std::vector<Graph> pool = connected_graphs_up_to(6);
    pool.push_back(fig1_graph());
    pool.push_back(p4_blowup(2));
    for (const Graph& g : pool) {
        ClassReport r = class_report(g);
        if (g.edge_count() > 0) CHECK(r.psi >= 1);
        if (r.claw_free) CHECK(r.fork_free);
        if (r.bpw_bound) CHECK(*r.bpw_bound >= bipartite_pathwidth_exact(g).bpw);
        if (r.monotone) {
            REQUIRE(r.orders.has_value());
            CHECK(staircase_ok(g, r.orders->rows, r.orders->cols));
        }
    }
}

TEST_CASE("claw-free symmetric differences are unions of paths and cycles") {
    std::vector<Graph> pool = connected_graphs_up_to(5);
    pool.push_back(line_of_k4());
    for (const Graph& g : pool) {
        if (detect_pattern(g, Pattern::claw)) continue;
        auto sets = enumerate_independent_sets(g).flat();
        for (VertexSet x : sets)
            for (VertexSet y : sets) {
                auto [h, old_of] = induced_subgraph(g, x ^ y);
                CHECK(h.max_degree() <= 2);
            }
    }
}
