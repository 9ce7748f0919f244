#include "moduli/graph_canonical.hpp"
#include "moduli/graph_enumerate.hpp"
#include "moduli/graph_reduction.hpp"
#include "moduli/stable_graph.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using namespace moduli;

namespace {

StableGraph theta() {
    return StableGraph({{0}, {0}}, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}});
}

StableGraph dumbbell() {
    return StableGraph({{0}, {0}}, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

StableGraph shuffled(std::mt19937& rng, const StableGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return relabeled(g, order);
}

} // namespace

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(StableGraph({}, {}), std::domain_error);
    CHECK_THROWS_AS(StableGraph({{0}}, {{0, 1, 1}}), std::domain_error);
    CHECK_THROWS_AS(StableGraph({{0}}, {{0, 0, 0}}), std::domain_error);
    CHECK_THROWS_AS(StableGraph({{-1}}, {}), std::domain_error);
    CHECK_THROWS_AS(StableGraph({{1}, {1}}, {}), std::domain_error); // disconnected
}

TEST_CASE("valence counts edge-ends") {
    const StableGraph two_loops({{0}}, {{0, 0, 1}, {0, 0, 1}});
    CHECK(two_loops.valence(0) == 4);

    const StableGraph path({{1}, {0}, {1}}, {{0, 1, 1}, {1, 2, 1}});
    CHECK(path.valence(1) == 2);

    const StableGraph loop_and_bridge({{0}, {1}}, {{0, 0, 1}, {0, 1, 1}});
    CHECK(loop_and_bridge.valence(0) == 3);
    CHECK_THROWS_AS(loop_and_bridge.valence(7), std::domain_error);
}

TEST_CASE("total genus") {
    CHECK(StableGraph({{2}}, {}).total_genus() == 2);
    CHECK(StableGraph({{0}}, {{0, 0, 1}, {0, 0, 1}}).total_genus() == 2);
    // Theta: 0 + 3 - 2 + 1; the Betti number of the multigraph is
    // E - (V - 1) on a connected graph, computed here from a spanning tree.
    const StableGraph th = theta();
    const int betti = th.edge_count() - (th.vertex_count() - 1);
    CHECK(betti == 2);
    CHECK(th.total_genus() == 2);
}

TEST_CASE("stability classes") {
    CHECK(stability_class(StableGraph({{1}, {0}}, {{0, 1, 1}})) == GraphStability::NotSemistable);
    CHECK(stability_class(StableGraph({{1}, {0}, {1}}, {{0, 1, 1}, {1, 2, 1}})) ==
          GraphStability::SemistableNotStable);
    CHECK(stability_class(theta()) == GraphStability::Stable);
    // Higher-genus vertices are unconstrained.
    CHECK(stability_class(StableGraph({{1}, {1}}, {{0, 1, 1}})) == GraphStability::Stable);
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
    std::mt19937 rng(31);
    SECTION("random relabelings keep the key") {
        for (int genus = 2; genus <= 3; ++genus)
            for (const auto& g : enumerate_stable_graphs(genus)) {
                const auto key = canonical_form(g);
                for (int i = 0; i < 5; ++i)
                    CHECK(canonical_form(shuffled(rng, g)) == key);
            }
    }
    SECTION("theta and dumbbell differ") {
        CHECK(canonical_form(theta()) != canonical_form(dumbbell()));
        CHECK(canonical_form(theta(), true) != canonical_form(dumbbell(), true));
    }
    SECTION("thickness-blind keys ignore thickness") {
        const StableGraph thick({{1}, {1}}, {{0, 1, 2}});
        const StableGraph thin({{1}, {1}}, {{0, 1, 1}});
        CHECK(canonical_form(thick) != canonical_form(thin));
        CHECK(canonical_form(thick, true) == canonical_form(thin, true));
    }
    SECTION("thickness-aware keys separate thickness patterns") {
        const StableGraph a({{1}, {1}}, {{0, 1, 2}, {0, 1, 3}});
        const StableGraph b({{1}, {1}}, {{0, 1, 2}, {0, 1, 2}});
        CHECK(canonical_form(a) != canonical_form(b));
        CHECK(canonical_form(a, true) == canonical_form(b, true));
    }
    SECTION("vertex guard") {
        std::vector<GraphVertex> verts(17, GraphVertex{1});
        std::vector<GraphEdge> edges;
        for (int i = 0; i + 1 < 17; ++i)
            edges.push_back({i, i + 1, 1});
        CHECK_THROWS_AS(canonical_form(StableGraph(verts, edges)), capacity_error);
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(theta()) == 12);    // 2 * 3!
    CHECK(automorphism_count(dumbbell()) == 8);  // swap * 2 loop orientations each
    CHECK(automorphism_count(StableGraph({{2}}, {})) == 1);
    CHECK(automorphism_count(StableGraph({{1}, {1}}, {{0, 1, 1}})) == 2);
    CHECK(automorphism_count(StableGraph({{0}}, {{0, 0, 1}, {0, 0, 1}})) == 8);

    SECTION("brute-force oracle agreement on small graphs") {
        std::mt19937 rng(37);
        int checked = 0;
        for (int genus = 2; genus <= 3; ++genus)
            for (const auto& g : enumerate_stable_graphs(genus)) {
                if (g.edge_count() > 5)
                    continue;
                CHECK(automorphism_count(g) == oracles::brute_force_automorphisms(g));
                const auto thick = oracles::with_random_thickness(rng, g, 3);
                CHECK(automorphism_count(thick) == oracles::brute_force_automorphisms(thick));
                ++checked;
            }
        CHECK(checked >= 10);
    }
}

TEST_CASE("base change multiplies thickness") {
    const StableGraph th({{0}, {0}}, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}});
    const auto changed = base_change(th, 2);
    std::vector<int> thicknesses;
    for (const auto& e : changed.edges())
        thicknesses.push_back(e.thickness);
    std::sort(thicknesses.begin(), thicknesses.end());
    CHECK(thicknesses == std::vector<int>{2, 4, 6});

    const auto bridge = StableGraph({{1}, {1}}, {{0, 1, 2}});
    CHECK(base_change(bridge, 3).edges()[0].thickness == 6);
    CHECK(canonical_form(base_change(bridge, 1)) == canonical_form(bridge));
    CHECK_THROWS_AS(base_change(bridge, 0), std::domain_error);
}

TEST_CASE("resolution of thick nodes") {
    SECTION("bridge of thickness 3 becomes a chain through two rational curves") {
        const StableGraph g({{1}, {1}}, {{0, 1, 3}});
        const auto r = resolve(g);
        CHECK(r.vertex_count() == 4);
        CHECK(r.edge_count() == 3);
        CHECK(r.total_genus() == g.total_genus());
        const StableGraph expected({{1}, {0}, {0}, {1}}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
        CHECK(canonical_form(r) == canonical_form(expected));
    }
    SECTION("thickness 1 is untouched") {
        const auto g = theta();
        CHECK(canonical_form(resolve(g)) == canonical_form(g));
    }
    SECTION("self-loop of thickness 2 becomes a 2-cycle") {
        const StableGraph g({{1}}, {{0, 0, 2}});
        const auto r = resolve(g);
        CHECK(r.vertex_count() == 2);
        CHECK(r.edge_count() == 2);
        CHECK(r.total_genus() == 2);
        CHECK(canonical_form(r) ==
              canonical_form(StableGraph({{1}, {0}}, {{0, 1, 1}, {0, 1, 1}})));
    }
    SECTION("resolution preserves genus and semistability") {
        std::mt19937 rng(41);
        for (int trial = 0; trial < 40; ++trial) {
            const int genus = std::uniform_int_distribution<int>(2, 5)(rng);
            const auto g = oracles::with_random_thickness(
                rng, oracles::random_stable_graph(rng, genus), 4);
            const auto r = resolve(g);
            CHECK(r.total_genus() == g.total_genus());
            CHECK(stability_class(r) != GraphStability::NotSemistable);
            for (const auto& e : r.edges())
                CHECK(e.thickness == 1);
        }
    }
}

TEST_CASE("stabilization") {
    SECTION("chain contraction adds thickness") {
        const StableGraph g({{1}, {0}, {1}}, {{0, 1, 1}, {1, 2, 1}});
        const auto s = stabilize(g);
        CHECK(s.vertex_count() == 2);
        REQUIRE(s.edge_count() == 1);
        CHECK(s.edges()[0].thickness == 2);
        CHECK(stability_class(s) == GraphStability::Stable);
    }
    SECTION("already stable graphs are unchanged") {
        const auto g = theta();
        CHECK(canonical_form(stabilize(g)) == canonical_form(g));
    }
    SECTION("parallel chain contraction can form loops") {
        // genus-1 vertex joined to a rational vertex by two edges: the
        // rational vertex contracts into a self-loop of thickness 2.
        const StableGraph g({{1}, {0}}, {{0, 1, 1}, {0, 1, 1}});
        const auto s = stabilize(g);
        CHECK(s.vertex_count() == 1);
        REQUIRE(s.edge_count() == 1);
        CHECK(s.edges()[0].a == s.edges()[0].b);
        CHECK(s.edges()[0].thickness == 2);
        CHECK(s.total_genus() == g.total_genus());
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(stabilize(StableGraph({{2}, {0}}, {{0, 1, 1}})), std::domain_error);
        // A pure rational cycle has total genus 1: no anchor to contract onto.
        CHECK_THROWS_AS(stabilize(StableGraph({{0}, {0}}, {{0, 1, 1}, {0, 1, 1}})),
                        std::domain_error);
    }
    SECTION("round trip: stabilize(resolve(G)) returns G with thickness intact") {
        std::mt19937 rng(43);
        for (int trial = 0; trial < 60; ++trial) {
            const int genus = std::uniform_int_distribution<int>(2, 5)(rng);
            const auto g = oracles::with_random_thickness(
                rng, oracles::random_stable_graph(rng, genus), 4);
            CHECK(canonical_form(stabilize(resolve(g))) == canonical_form(g));
        }
    }
    SECTION("confluence: random contraction orders give the same result") {
        std::mt19937 rng(47);
        for (int trial = 0; trial < 20; ++trial) {
            const int genus = std::uniform_int_distribution<int>(2, 4)(rng);
            const auto g = resolve(oracles::with_random_thickness(
                rng, oracles::random_stable_graph(rng, genus), 4));
            const auto reference = canonical_form(stabilize(g));
            for (int order = 0; order < 5; ++order) {
                StableGraph h = g;
                for (;;) {
                    std::vector<int> removable;
                    for (int v = 0; v < h.vertex_count(); ++v)
                        if (is_contractible(h, v))
                            removable.push_back(v);
                    if (removable.empty())
                        break;
                    const int pick = removable[static_cast<std::size_t>(
                        std::uniform_int_distribution<int>(
                            0, static_cast<int>(removable.size()) - 1)(rng))];
                    h = contract_vertex(h, pick);
                }
                CHECK(canonical_form(h) == reference);
            }
        }
    }
    SECTION("genus conservation along the whole calculus") {
        std::mt19937 rng(53);
        for (int trial = 0; trial < 30; ++trial) {
            const int genus = std::uniform_int_distribution<int>(2, 5)(rng);
            const auto g = oracles::with_random_thickness(
                rng, oracles::random_stable_graph(rng, genus), 4);
            const int e = std::uniform_int_distribution<int>(1, 4)(rng);
            const auto changed = base_change(g, e);
            CHECK(changed.total_genus() == genus);
            const auto resolved = resolve(changed);
            CHECK(resolved.total_genus() == genus);
            CHECK(stabilize(resolved).total_genus() == genus);
        }
    }
}
