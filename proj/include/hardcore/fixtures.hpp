#pragma once

#include <string>
#include <vector>

#include "hardcore/catalog.hpp"
#include "hardcore/graph.hpp"

namespace hardcore {

// Interval graph on 8 vertices (realizable on a line) containing both a claw
// at vertex 0 and a fork: chordal, hence hole-free with no induced 4-cycle.
inline Graph interval_claw_graph() {
    Graph g(8);
    for (auto [u, v] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 3}, {0, 4},
                        {1, 4}, {1, 5}, {2, 5}, {2, 6}, {0, 7}})
        g.add_edge(u, v);
    return g;
}

// Square of P5: vertices 0..4 adjacent when |i - j| <= 2; a claw-free unit
// interval graph.
inline Graph unit_interval_graph() {
    Graph g(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (j - i <= 2) g.add_edge(i, j);
    return g;
}

// Star with centre 2 (weight 3) and leaves 0, 1, 3 (weights 2, 2, 1): the
// stock weighted expansion example whose blow-up has 8 vertices.
inline WeightedGraph weighted_star_example() {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    WeightedGraph wg(g);
    wg.w = {2, 2, 3, 1};
    return wg;
}

// A named instance as shipped under fixtures/<name>.txt.
struct NamedFixture {
    std::string name;         // file stem
    std::string description;  // one-line header comment in the file
    WeightedGraph graph;
};

// Every named fixture, in the order they are documented.  The same list
// drives the file generator, the file-identity test, and the acceptance
// catalog, so the three can never drift apart.
inline std::vector<NamedFixture> named_fixtures() {
    std::vector<NamedFixture> out;
    auto add = [&out](std::string name, std::string desc, Graph g) {
        out.push_back({std::move(name), std::move(desc), WeightedGraph(std::move(g))});
    };
    add("fig1", "running example used for the worked path decomposition", fig1_graph());
    add("p4k1", "blown-up path P4^(1) = P4", p4_blowup(1));
    add("p4k2", "blown-up path P4^(2)", p4_blowup(2));
    add("p4k3", "blown-up path P4^(3)", p4_blowup(3));
    add("q3", "the cube graph Q3", cube_graph());
    add("bw3star", "augmented bipartite wheel BW*_3 with two centres", bw3_star(2));
    add("c5", "cycle C5", cycle_graph(5));
    add("c6", "cycle C6", cycle_graph(6));
    add("c7", "cycle C7", cycle_graph(7));
    add("c8", "cycle C8", cycle_graph(8));
    add("lk4", "line graph of K4 (the octahedron)", line_of_k4());
    add("lk33", "line graph of K3,3 (the 3x3 rook's graph)", line_of_k33());
    add("fig6_d1", "circulant bipartite construction, delta = 2 on 4+4 vertices",
        circulant_bipartite(4, 2));
    add("fig6_d2", "circulant bipartite construction, delta = 4 on 6+6 vertices",
        circulant_bipartite(6, 4));
    add("interval", "interval graph with a claw and a fork", interval_claw_graph());
    add("unit_interval", "claw-free unit interval graph (square of P5)", unit_interval_graph());
    add("kdd2", "complete bipartite K2,2", complete_bipartite(2, 2));
    add("kdd3", "complete bipartite K3,3", complete_bipartite(3, 3));
    out.push_back({"blowup_star", "weighted star whose expansion has 8 vertices",
                   weighted_star_example()});
    return out;
}

// The text content of fixtures/<name>.txt: one comment header line followed
// by the canonical serialization.
inline std::string fixture_file_text(const NamedFixture& f) {
    return "# " + f.name + ": " + f.description + "\n" + graph_to_text(f.graph);
}

// Acceptance catalog: every connected graph on at most max_n vertices (one
// per isomorphism class) plus the unweighted named fixtures.
inline std::vector<Graph> acceptance_catalog(int max_n) {
    std::vector<Graph> out = connected_graphs_up_to(max_n);
    for (const NamedFixture& f : named_fixtures())
        if (f.graph.uniform()) out.push_back(f.graph.g);
    return out;
}

}  // namespace hardcore
