#include <catch2/catch_amalgamated.hpp>

#include "hardcore/independence.hpp"
#include "hardcore/rng.hpp"

using namespace hardcore;

static Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

static Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

static Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

static Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

TEST_CASE("independent set enumeration") {
    SECTION("triangle") {
        auto sets = enumerate_independent_sets(complete(3));
        REQUIRE(sets.alpha() == 1);
        CHECK(sets.by_size[0] == std::vector<VertexSet>{0});
        CHECK(sets.by_size[1] == std::vector<VertexSet>{bit(0), bit(1), bit(2)});
    }
    SECTION("edgeless pair has four sets") {
        CHECK(enumerate_independent_sets(Graph(2)).total() == 4);
    }
    SECTION("path on four vertices") {
        auto sets = enumerate_independent_sets(path(4));
        REQUIRE(sets.alpha() == 2);
        CHECK(sets.total() == 8);
        CHECK(sets.by_size[1].size() == 4);
        CHECK(sets.by_size[2] == std::vector<VertexSet>{bit(0) | bit(2), bit(0) | bit(3), bit(1) | bit(3)});
    }
    SECTION("cap is enforced") {
        CHECK_THROWS_AS(enumerate_independent_sets(Graph(25)), std::runtime_error);
    }
    SECTION("every enumerated set is independent and none is missed") {
        Rng rng(2024);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 1 + static_cast<int>(rng.uniform_below(7));
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.bernoulli(0.4)) g.add_edge(u, v);
            auto sets = enumerate_independent_sets(g);
            size_t direct = 0;
            for (VertexSet s = 0; s < (VertexSet(1) << n); ++s)
                if (is_independent(g, s)) ++direct;
            CHECK(sets.total() == direct);
            for (size_t k = 0; k < sets.by_size.size(); ++k)
                for (VertexSet s : sets.by_size[k]) {
                    CHECK(popcount(s) == static_cast<int>(k));
                    CHECK(is_independent(g, s));
                }
        }
    }
}

TEST_CASE("polynomial profile") {
    SECTION("complete graphs: P = 1 + n*lambda") {
        for (int n = 1; n <= 6; ++n) {
            for (Rat lambda : {Rat(1, 2), Rat(1), Rat(2)}) {
                auto p = profile(WeightedGraph(complete(n)), lambda);
                CHECK(p.alpha == 1);
                CHECK(p.partition_unweighted() == 1 + n * lambda);
            }
        }
    }
    SECTION("path on four vertices at lambda=1") {
        auto p = profile(WeightedGraph(path(4)), 1);
        CHECK(p.counts == std::vector<BigInt>{1, 4, 3});
        CHECK(p.partition_unweighted() == 8);
        CHECK(p.ratios == std::vector<Rat>{Rat(1, 4), Rat(4, 3)});
    }
    SECTION("weighted edge") {
        WeightedGraph wg(complete(2));
        wg.w = {2, 3};
        auto p = profile(wg, 1);
        CHECK(p.weighted_counts == std::vector<BigInt>{1, 5});
        CHECK(p.counts == std::vector<BigInt>{1, 2});
    }
    SECTION("scaled values M_k = lambda^k N_k") {
        auto p = profile(WeightedGraph(path(4)), Rat(1, 2));
        CHECK(p.scaled == std::vector<Rat>{Rat(1), Rat(2), Rat(3, 4)});
    }
    SECTION("counts agree with direct enumeration on random graphs") {
        Rng rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            int n = 1 + static_cast<int>(rng.uniform_below(8));
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.bernoulli(0.35)) g.add_edge(u, v);
            auto sets = enumerate_independent_sets(g);
            auto p = profile(WeightedGraph(g), 1);
            REQUIRE(p.alpha == sets.alpha());
            for (int k = 0; k <= p.alpha; ++k)
                CHECK(p.counts[static_cast<size_t>(k)] == BigInt(sets.by_size[static_cast<size_t>(k)].size()));
        }
    }
    SECTION("basic count invariants") {
        Rng rng(11);
        for (int trial = 0; trial < 15; ++trial) {
            int n = 2 + static_cast<int>(rng.uniform_below(7));
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.bernoulli(0.3)) g.add_edge(u, v);
            auto p = profile(WeightedGraph(g), 1);
            CHECK(p.counts[0] == 1);
            CHECK(p.counts[1] == n);
            BigInt binom = 1;
            for (int k = 0; k <= p.alpha; ++k) {
                CHECK(p.counts[static_cast<size_t>(k)] <= binom);
                binom = binom * (n - k) / (k + 1);
            }
            CHECK(p.counts[static_cast<size_t>(p.alpha)] > 0);
        }
    }
}

TEST_CASE("partition function bounds") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform_below(8));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(0.4)) g.add_edge(u, v);
        for (Rat lambda : {Rat(1, 2), Rat(1), Rat(2)}) {
            auto p = profile(WeightedGraph(g), lambda);
            Rat part = p.partition_unweighted();
            CHECK(1 + n * lambda <= part);
            CHECK(part <= rat_pow(1 + lambda, static_cast<unsigned>(n)));
            if (n * lambda >= 1) {
                // Lower rational witness below e suffices for the upper bound.
                Rat e_lo(2718281828, 1000000000);
                CHECK(part <= e_lo * rat_pow(n * lambda, static_cast<unsigned>(p.alpha)));
            }
        }
    }
}

TEST_CASE("gibbs distribution") {
    SECTION("lambda=0 is a point mass on the empty set") {
        auto g = cycle(5);
        auto sets = enumerate_independent_sets(g);
        auto pi = gibbs_masses(WeightedGraph(g), sets, 0);
        CHECK(pi[0] == 1);
        for (size_t i = 1; i < pi.size(); ++i) CHECK(pi[i] == 0);
    }
    SECTION("single edge at lambda=1 is uniform over three states") {
        auto sets = enumerate_independent_sets(complete(2));
        auto pi = gibbs_masses(WeightedGraph(complete(2)), sets, 1);
        REQUIRE(pi.size() == 3);
        for (const Rat& m : pi) CHECK(m == Rat(1, 3));
    }
    SECTION("mass of the empty set is exactly 1/P") {
        for (Rat lambda : {Rat(1, 2), Rat(2)}) {
            auto g = path(5);
            auto sets = enumerate_independent_sets(g);
            auto pi = gibbs_masses(WeightedGraph(g), sets, lambda);
            auto p = profile(WeightedGraph(g), lambda);
            CHECK(pi[0] == 1 / p.partition_unweighted());
            Rat total = 0;
            for (const Rat& m : pi) total += m;
            CHECK(total == 1);
        }
    }
    SECTION("weights multiply the mass") {
        WeightedGraph wg(complete(2));
        wg.w = {2, 3};
        auto sets = enumerate_independent_sets(wg.g);
        auto pi = gibbs_masses(wg, sets, 1);
        // P = 1 + 2 + 3 = 6
        CHECK(pi[0] == Rat(1, 6));
        CHECK(pi[1] == Rat(2, 6));
        CHECK(pi[2] == Rat(3, 6));
    }
}

TEST_CASE("polynomial roots") {
    SECTION("single vertex: root at -1") {
        auto p = profile(WeightedGraph(Graph(1)), 1);
        auto rep = check_real_negative_roots(p, 1e-8);
        CHECK(rep.pass);
        REQUIRE(rep.roots.size() == 1);
        CHECK(rep.roots[0].re == Catch::Approx(-1.0));
        CHECK(rep.roots[0].im == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("five-cycle: quadratic with real negative roots") {
        auto p = profile(WeightedGraph(cycle(5)), 1);
        CHECK(p.counts == std::vector<BigInt>{1, 5, 5});
        auto rep = check_real_negative_roots(p, 1e-8);
        CHECK(rep.pass);
        REQUIRE(rep.roots.size() == 2);
        CHECK(rep.roots[0].re == Catch::Approx((-5.0 - std::sqrt(5.0)) / 10.0));
        CHECK(rep.roots[1].re == Catch::Approx((-5.0 + std::sqrt(5.0)) / 10.0));
        for (const auto& r : rep.roots) CHECK(r.residual < 1e-12);
    }
    SECTION("octahedron (line graph of K4)") {
        Graph oct(6);  // three antipodal pairs, all edges except the pairs
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (v != u + 3 || u >= 3) oct.add_edge(u, v);
        auto p = profile(WeightedGraph(oct), 1);
        CHECK(p.counts == std::vector<BigInt>{1, 6, 3});
        CHECK(check_real_negative_roots(p, 1e-8).pass);
    }
    SECTION("the claw has a complex pair and the check reports failure") {
        auto p = profile(WeightedGraph(star(3)), 1);
        CHECK(p.counts == std::vector<BigInt>{1, 4, 3, 1});
        auto rep = check_real_negative_roots(p, 1e-8);
        CHECK_FALSE(rep.pass);
        CHECK(rep.witness >= 0);
    }
}

TEST_CASE("log-concavity checks") {
    SECTION("alpha=1 passes vacuously") {
        auto p = profile(WeightedGraph(complete(2)), 1);
        auto rep = log_concavity_report(p);
        CHECK(rep.all_pass);
        CHECK(rep.ratio_checks.empty());
    }
    SECTION("five-cycle at several fugacities") {
        for (Rat lambda : {Rat(1, 2), Rat(1), Rat(2)}) {
            auto p = profile(WeightedGraph(cycle(5)), lambda);
            auto rep = log_concavity_report(p);
            CHECK(rep.all_pass);
            REQUIRE(rep.ratio_checks.size() == 1);
            CHECK(rep.ratio_checks[0].pass);
            for (const auto& d : rep.decay_checks) CHECK(d.strong_rational);
        }
    }
    SECTION("octahedron passes") {
        Graph oct(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (v != u + 3 || u >= 3) oct.add_edge(u, v);
        auto p = profile(WeightedGraph(oct), 1);
        CHECK(log_concavity_report(p).all_pass);
    }
    SECTION("ratio lambda_i increases strictly for small claw-free graphs") {
        for (const Graph& g : {cycle(5), cycle(6), path(5), path(6)}) {
            auto p = profile(WeightedGraph(g), 1);
            for (size_t i = 1; i < p.ratios.size(); ++i) CHECK(p.ratios[i - 1] < p.ratios[i]);
        }
    }
}
