#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "hardcore/fixtures.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/independence.hpp"
#include "hardcore/pathdecomp.hpp"
#include "hardcore/recognizers.hpp"

using namespace hardcore;

namespace {

std::string fixtures_dir() {
    const char* env = std::getenv("BPW_FIXTURES");
    return env ? env : "fixtures";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("fixture files match their constructors byte for byte") {
    std::set<std::string> seen;
    for (const NamedFixture& f : named_fixtures()) {
        INFO("fixture " << f.name);
        CHECK(seen.insert(f.name).second);

        // The shipped file is exactly what the generator writes...
        std::string text = slurp(fixtures_dir() + "/" + f.name + ".txt");
        CHECK(text == fixture_file_text(f));

        // ...and parses back to the constructed graph: same size, adjacency,
        // weights, and identity labelling, with no load warnings.
        LoadResult res = load_graph_text(text);
        CHECK(res.warnings.empty());
        const WeightedGraph& got = res.graph;
        REQUIRE(got.g.n == f.graph.g.n);
        for (int v = 0; v < got.g.n; ++v) {
            CHECK(got.g.adj[size_t(v)] == f.graph.g.adj[size_t(v)]);
            CHECK(got.w[size_t(v)] == f.graph.w[size_t(v)]);
            CHECK(got.labels[size_t(v)] == v);
        }
    }
}

TEST_CASE("named fixtures have the documented shapes") {
    std::set<std::string> names;
    for (const NamedFixture& f : named_fixtures()) names.insert(f.name);
    auto graph_of = [](const std::string& name) {
        for (const NamedFixture& f : named_fixtures())
            if (f.name == name) return f.graph;
        throw std::logic_error("missing fixture " + name);
    };

    // Size and edge-count pins for every file.
    struct Shape { const char* name; int n; int edges; };
    for (Shape s : {Shape{"fig1", 10, 15},     {"p4k1", 4, 3},   {"p4k2", 8, 12},
                    {"p4k3", 12, 27},          {"q3", 8, 12},    {"bw3star", 8, 12},
                    {"c5", 5, 5},              {"c6", 6, 6},     {"c7", 7, 7},
                    {"c8", 8, 8},              {"lk4", 6, 12},   {"lk33", 9, 18},
                    {"fig6_d1", 8, 8},         {"fig6_d2", 12, 24},
                    {"interval", 8, 9},        {"unit_interval", 5, 7},
                    {"kdd2", 4, 4},            {"kdd3", 6, 9},   {"blowup_star", 4, 3}}) {
        INFO("fixture " << s.name);
        REQUIRE(names.count(s.name) == 1);
        WeightedGraph wg = graph_of(s.name);
        CHECK(wg.g.n == s.n);
        CHECK(wg.g.edge_count() == s.edges);
    }

    // The lone weighted fixture carries the documented weights.
    WeightedGraph star = graph_of("blowup_star");
    CHECK_FALSE(star.uniform());
    CHECK(star.w == std::vector<long long>{2, 2, 3, 1});
    CHECK(star.g.degree(2) == 3);

    // Class spot-checks that downstream suites lean on.
    CHECK_FALSE(detect_pattern(graph_of("unit_interval").g, Pattern::claw).has_value());
    CHECK(detect_pattern(graph_of("interval").g, Pattern::claw).has_value());
    CHECK_FALSE(find_hole(graph_of("interval").g).has_value());
    CHECK_FALSE(detect_pattern(graph_of("lk4").g, Pattern::claw).has_value());
    CHECK_FALSE(detect_pattern(graph_of("lk33").g, Pattern::claw).has_value());
    CHECK(bipartition(graph_of("fig6_d1").g).has_value());
    CHECK(bipartition(graph_of("fig6_d2").g).has_value());
    CHECK(bipartition(graph_of("q3").g).has_value());
    CHECK(bipartition(graph_of("bw3star").g).has_value());
    CHECK(profile(graph_of("lk4"), Rat(1)).alpha == 2);
    CHECK(profile(graph_of("lk33"), Rat(1)).alpha == 3);
    CHECK(pathwidth_exact(graph_of("kdd2").g).pathwidth == 2);
    CHECK(pathwidth_exact(graph_of("kdd3").g).pathwidth == 3);
}

TEST_CASE("acceptance catalog composition") {
    // Named unweighted fixtures ride along after the exhaustive small graphs.
    std::vector<Graph> cat3 = acceptance_catalog(3);
    std::vector<Graph> small = connected_graphs_up_to(3);
    size_t named_unweighted = 0;
    for (const NamedFixture& f : named_fixtures())
        if (f.graph.uniform()) ++named_unweighted;
    REQUIRE(cat3.size() == small.size() + named_unweighted);
    for (size_t i = 0; i < small.size(); ++i) CHECK(cat3[i].n == small[i].n);
    for (const Graph& g : cat3) CHECK(g.n >= 1);
}
