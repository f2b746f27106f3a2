#include <doctest.h>

#include <random>

#include "fourient/enumeration.hpp"
#include "fourient/fourientation.hpp"
#include "support/oracles.hpp"

using namespace fourient;
using oracles::phi;

namespace {

const Multigraph& triangle() {
    static const Multigraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    return g;
}

}  // namespace

TEST_CASE("realize") {
    CHECK(realize(phi(triangle(), "222")).arc_count() == 6);
    CHECK(realize(phi(triangle(), "000")).arc_count() == 0);

    // (Forward, Forward, Backward) orients the triangle cyclically.
    const Digraph d = realize(phi(triangle(), "ffb"));
    REQUIRE(d.arc_count() == 3);
    CHECK(d.arc(0) == Arc{0, 1, {ArcKind::EdgeForward, 0}});
    CHECK(d.arc(1) == Arc{1, 2, {ArcKind::EdgeForward, 1}});
    CHECK(d.arc(2) == Arc{2, 0, {ArcKind::EdgeBackward, 2}});
    CHECK(scc(d).component_count == 1);
}

TEST_CASE("augment") {
    const ConstraintSystem none;
    CHECK(augment(phi(triangle(), "f0b"), none).arcs() == realize(phi(triangle(), "f0b")).arcs());

    const Multigraph edgeless(2, {});
    const Digraph with_a = augment(Fourientation(edgeless, {}), ConstraintSystem({{0, 1}}, {}));
    REQUIRE(with_a.arc_count() == 1);
    CHECK(with_a.arc(0) == Arc{0, 1, {ArcKind::ConstraintA, 0}});

    const ConstraintSystem two_b({}, {{0, 1}, {1, 2}});
    const Digraph d = augment(phi(triangle(), "000"), two_b);
    REQUIRE(d.arc_count() == 2);
    const SccDecomposition components = scc(d);
    for (int i = 0; i < d.arc_count(); ++i) {
        CHECK(classify_arc(d, components, i) == ArcClass::Acyclic);
    }
}

TEST_CASE("constraint lists deduplicate but keep order") {
    const ConstraintSystem c({{1, 2}, {0, 1}, {1, 2}}, {{3, 3}, {3, 3}});
    CHECK(c.a() == std::vector<VertexPair>{{1, 2}, {0, 1}});
    CHECK(c.b() == std::vector<VertexPair>{{3, 3}});
}

TEST_CASE("is_valid basics") {
    const ConstraintSystem none;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(is_valid(oracles::random_fourientation(rng, triangle()), none));
    }

    // Single edge oriented forward; asking 0 to be unreachable from 1 fails
    // because the added arc 1->0 closes a 2-cycle.
    const Multigraph single(2, {{0, 1}});
    CHECK_FALSE(is_valid(phi(single, "f"), ConstraintSystem({{1, 0}}, {})));
    CHECK(is_valid(phi(single, "b"), ConstraintSystem({{1, 0}}, {})));
}

TEST_CASE("is_valid agrees with the reachability reading exhaustively") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph g = oracles::random_multigraph(rng, 5, 5);
        const ConstraintSystem c = oracles::random_constraints(rng, g.vertex_count(), 2, 2);
        const std::uint64_t total = std::uint64_t{1} << (2 * g.edge_count());
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<EdgeConfig> config;
            for (int e = 0; e < g.edge_count(); ++e) {
                config.push_back(static_cast<EdgeConfig>((code >> (2 * e)) & 3));
            }
            const Fourientation f(g, std::move(config));
            CHECK(is_valid(f, c) == oracles::valid_by_reachability(f, c));
        }
    }
}

TEST_CASE("a pair in both A and B makes everything invalid") {
    std::mt19937_64 rng(321);
    const ConstraintSystem clash({{0, 1}}, {{0, 1}});
    for (int trial = 0; trial < 64; ++trial) {
        CHECK_FALSE(is_valid(oracles::random_fourientation(rng, triangle()), clash));
    }
}

TEST_CASE("a loop constraint in A is unsatisfiable, in B vacuous") {
    const Multigraph single(2, {{0, 1}});
    for (const char* text : {"0", "f", "b", "2"}) {
        CHECK_FALSE(is_valid(phi(single, text), ConstraintSystem({{1, 1}}, {})));
        CHECK(is_valid(phi(single, text), ConstraintSystem({}, {{1, 1}})));
    }
}

TEST_CASE("the naive reading reproduces the 3 vs 4 counterexample") {
    // K3 with both constraints read directly on the plain digraph: the
    // orientation and subgraph counts disagree (3 vs 4), which is exactly why
    // validity adds the constraint arcs before testing reachability.
    const ConstraintSystem c({}, {{0, 1}, {1, 2}});
    int orientations = 0;
    int subgraphs = 0;
    for (const Fourientation& f : FourientationRange(triangle(), 0)) {
        if (is_valid_simple(f, c)) ++orientations;
    }
    for (const Fourientation& f : FourientationRange(triangle(), 0b111)) {
        if (is_valid_simple(f, c)) ++subgraphs;
    }
    CHECK(orientations == 3);
    CHECK(subgraphs == 4);

    CHECK(is_valid_simple(phi(triangle(), "f0b"), ConstraintSystem{}));
}

TEST_CASE("reverse_cycle") {
    const Digraph d = realize(phi(triangle(), "ffb"));
    std::vector<Arc> cycle{d.arc(0), d.arc(1), d.arc(2)};
    CHECK(reverse_cycle(phi(triangle(), "ffb"), cycle) == phi(triangle(), "bbf"));

    // Cycle through a 2-way edge flips only the 1-way edges.
    const Fourientation mixed = phi(triangle(), "ff2");
    const Digraph dm = realize(mixed);
    // arcs: 0->1 (e0 f), 1->2 (e1 f), 0->2 (e2 f), 2->0 (e2 b)
    std::vector<Arc> through{dm.arc(0), dm.arc(1), dm.arc(3)};
    CHECK(reverse_cycle(mixed, through) == phi(triangle(), "bb2"));

    // A cycle made of 2-way edges only changes nothing.
    const Fourientation all_two = phi(triangle(), "222");
    const Digraph dt = realize(all_two);
    std::vector<Arc> two_cycle{dt.arc(0), dt.arc(2), dt.arc(5)};
    CHECK(reverse_cycle(all_two, two_cycle) == all_two);
}

TEST_CASE("reverse_cycle rejects non-cycles") {
    const Fourientation f = phi(triangle(), "ffb");
    const Digraph d = realize(f);
    CHECK_THROWS_AS(reverse_cycle(f, {}), std::invalid_argument);
    CHECK_THROWS_AS(reverse_cycle(f, {d.arc(0), d.arc(1)}), std::invalid_argument);  // open path
    CHECK_THROWS_AS(reverse_cycle(f, {d.arc(0), d.arc(0)}), std::invalid_argument);
    // Arc not present in this realization.
    CHECK_THROWS_AS(reverse_cycle(f, {Arc{1, 0, {ArcKind::EdgeBackward, 0}},
                                      Arc{0, 1, {ArcKind::EdgeForward, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("reverse_cocycle") {
    const Multigraph path(3, {{0, 1}, {1, 2}});
    const ConstraintSystem none;
    // 0->1, 1->2 with the cut {0,1} | {2}: only edge (1,2) crosses.
    CHECK(reverse_cocycle(phi(path, "ff"), none, 0b011) == phi(path, "fb"));

    const Multigraph single(2, {{0, 1}});
    CHECK(reverse_cocycle(phi(single, "f"), none, 0b01) == phi(single, "b"));

    // All crossing edges 0-way: accepted, acts as the identity.
    CHECK(reverse_cocycle(phi(single, "0"), none, 0b01) == phi(single, "0"));
}

TEST_CASE("reverse_cocycle rejects bad cuts") {
    const Multigraph single(2, {{0, 1}});
    const ConstraintSystem none;
    // Backward crossing arc.
    CHECK_THROWS_AS(reverse_cocycle(phi(single, "f"), none, 0b10), std::invalid_argument);
    // 2-way edge across the cut.
    CHECK_THROWS_AS(reverse_cocycle(phi(single, "2"), none, 0b01), std::invalid_argument);
    // No crossing edge at all.
    CHECK_THROWS_AS(reverse_cocycle(phi(single, "f"), none, 0b11), std::invalid_argument);
    // Constraint pair across the cut.
    CHECK_THROWS_AS(reverse_cocycle(phi(single, "f"), ConstraintSystem({}, {{0, 1}}), 0b01),
                    std::invalid_argument);
}

TEST_CASE("reversal moves preserve validity and the solid set") {
    std::mt19937_64 rng(777);
    int checked_moves = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Multigraph g = oracles::random_multigraph(rng, 4, 5);
        const ConstraintSystem c = oracles::random_constraints(rng, g.vertex_count(), 1, 1);
        const Fourientation f = oracles::random_fourientation(rng, g);
        if (!is_valid(f, c)) continue;
        const Digraph d = realize(f);
        for (const DirectedCycle& cycle : enumerate_directed_cycles(d)) {
            std::vector<Arc> arcs;
            for (int i : cycle.arc_indices) arcs.push_back(d.arc(i));
            const Fourientation flipped = reverse_cycle(f, arcs);
            CHECK(is_valid(flipped, c));
            CHECK(flipped.solid_edges() == f.solid_edges());
            // The opposite traversal undoes the move.
            std::vector<Arc> opposite;
            for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
                const ArcKind kind = it->label.kind == ArcKind::EdgeForward
                                         ? ArcKind::EdgeBackward
                                         : ArcKind::EdgeForward;
                opposite.push_back({it->head, it->tail, {kind, it->label.index}});
            }
            CHECK(reverse_cycle(flipped, opposite) == f);
            ++checked_moves;
        }
        for (VertexMask side : ab_cocycle_cuts(f, c)) {
            const Fourientation flipped = reverse_cocycle(f, c, side);
            CHECK(is_valid(flipped, c));
            CHECK(flipped.solid_edges() == f.solid_edges());
            const VertexMask complement =
                ~side & ((VertexMask{1} << g.vertex_count()) - 1);
            CHECK(reverse_cocycle(flipped, c, complement) == f);
            ++checked_moves;
        }
    }
    CHECK(checked_moves > 100);
}

TEST_CASE("has_two_way_cycle and has_zero_way_cocycle") {
    const ConstraintSystem none;
    CHECK(has_two_way_cycle(phi(triangle(), "222")));
    CHECK_FALSE(has_two_way_cycle(phi(triangle(), "220")));
    CHECK(has_zero_way_cocycle(phi(triangle(), "000"), none));
    CHECK_FALSE(has_zero_way_cocycle(phi(triangle(), "000"), ConstraintSystem({}, {{0, 1}, {1, 2}})));

    // For all-solid fourientations: no 2-way cycle means the present edges
    // form a forest, no 0-way cocycle means the subgraph is (A,B)-connected.
    std::mt19937_64 rng(888);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph g = oracles::random_multigraph(rng, 4, 6);
        const ConstraintSystem c = oracles::random_constraints(rng, g.vertex_count(), 1, 1);
        const EdgeMask all = g.all_edges_mask();
        for (EdgeMask sub = 0;; ++sub) {
            std::vector<EdgeConfig> config;
            for (int e = 0; e < g.edge_count(); ++e) {
                config.push_back(((sub >> e) & 1) ? EdgeConfig::TwoWay : EdgeConfig::ZeroWay);
            }
            const Fourientation f(g, std::move(config));
            CHECK(has_two_way_cycle(f) == !is_forest(g, sub));
            CHECK(has_zero_way_cocycle(f, c) == !is_ab_connected(g, sub, c));
            if (sub == all) break;
        }
    }
}

TEST_CASE("constraint builders") {
    const Multigraph g(3, {{0, 1}, {1, 2}});

    const ConstraintSystem whole = constraints_root_component(g, 1, {0, 1, 2});
    CHECK(whole.a().empty());
    CHECK(whole.b() == std::vector<VertexPair>{{1, 0}, {1, 1}, {1, 2}});

    const Multigraph pair(2, {{0, 1}});
    const ConstraintSystem lone = constraints_root_component(pair, 0, {0});
    CHECK(lone.a() == std::vector<VertexPair>{{0, 1}});
    CHECK(lone.b() == std::vector<VertexPair>{{0, 0}});

    CHECK_THROWS_AS(constraints_root_component(g, 0, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(constraints_root_component(g, 0, {0, 5}), std::invalid_argument);

    const ConstraintSystem cover = constraints_cover(pair, {0, 1}, {0, 1});
    CHECK(cover.a().empty());
    CHECK(cover.b() == std::vector<VertexPair>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK_THROWS_AS(constraints_cover(g, {0}, {1}), std::invalid_argument);
}

TEST_CASE("fourientation basics") {
    const Fourientation f = phi(triangle(), "f02");
    CHECK(f.solid_edges() == 0b110);
    CHECK(f.two_way_edges() == 0b100);
    CHECK(f.zero_way_edges() == 0b010);
    CHECK(f.to_string() == "f02");
    CHECK_THROWS_AS(Fourientation(triangle(), {EdgeConfig::Forward}), std::invalid_argument);
}
