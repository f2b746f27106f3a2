#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fourient/equivalence.hpp"
#include "support/oracles.hpp"

using namespace fourient;
using oracles::phi;

namespace {

const Multigraph& triangle() {
    static const Multigraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    return g;
}

const Multigraph& doubled_triangle() {
    static const Multigraph g(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
    return g;
}

}  // namespace

TEST_CASE("orientation classes of the triangle") {
    const ConstraintSystem none;
    CHECK(equivalence_classes(triangle(), none, 0, ReversalMode::Cycle).classes.size() == 7);
    CHECK(equivalence_classes(triangle(), none, 0, ReversalMode::Cocycle).classes.size() == 4);
    CHECK(equivalence_classes(triangle(), none, 0, ReversalMode::CycleCocycle).classes.size() == 3);
}

TEST_CASE("partition bookkeeping") {
    const ConstraintSystem none;
    const ClassPartition p = equivalence_classes(triangle(), none, 0b011, ReversalMode::CycleCocycle);
    CHECK(p.members.size() == 8);
    CHECK(p.class_of.size() == p.members.size());
    std::vector<std::uint64_t> sizes(p.classes.size(), 0);
    for (std::size_t i = 0; i < p.members.size(); ++i) {
        const int cls = p.class_of[i];
        ++sizes[static_cast<std::size_t>(cls)];
        // Class invariants hold for every member, not just the representative.
        CHECK(p.members[i].two_way_edges() == p.classes[static_cast<std::size_t>(cls)].two_way_edges);
        CHECK(p.members[i].zero_way_edges() ==
              p.classes[static_cast<std::size_t>(cls)].zero_way_edges);
        CHECK(p.members[i].solid_edges() == 0b011);
    }
    for (std::size_t k = 0; k < p.classes.size(); ++k) CHECK(sizes[k] == p.classes[k].size);
    // Representatives are the smallest members, and classes are sorted, in
    // config order.
    std::vector<std::vector<EdgeConfig>> reps;
    for (const EquivalenceClass& cls : p.classes) reps.push_back(cls.representative.configs());
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    for (std::size_t i = 0; i < p.members.size(); ++i) {
        CHECK_FALSE(p.members[i].configs() <
                    reps[static_cast<std::size_t>(p.class_of[i])]);
    }
}

TEST_CASE("filtering valid classes") {
    const ConstraintSystem none;
    SUBCASE("no solid edges: nothing to filter") {
        const ClassPartition p = equivalence_classes(triangle(), none, 0, ReversalMode::Cycle);
        const ClassPartition filtered = filter_valid_classes(p, triangle(), none, ReversalMode::Cycle);
        CHECK(filtered.classes.size() == p.classes.size());
        CHECK(filtered.members.size() == p.members.size());
    }
    SUBCASE("all solid, cycle mode: surviving classes are the forests") {
        const ClassPartition p =
            equivalence_classes(triangle(), none, 0b111, ReversalMode::Cycle);
        const ClassPartition filtered = filter_valid_classes(p, triangle(), none, ReversalMode::Cycle);
        CHECK(filtered.classes.size() ==
              count_subgraph_family(triangle(), none, SubgraphFamily::Forests, true));
    }
    SUBCASE("all solid, cycle-cocycle mode: surviving classes are connected forests") {
        const ClassPartition p =
            equivalence_classes(triangle(), none, 0b111, ReversalMode::CycleCocycle);
        const ClassPartition filtered =
            filter_valid_classes(p, triangle(), none, ReversalMode::CycleCocycle);
        CHECK(filtered.classes.size() ==
              count_subgraph_family(triangle(), none, SubgraphFamily::AbConnectedForests, true));
    }
    SUBCASE("mode mismatch is rejected") {
        const ClassPartition p = equivalence_classes(triangle(), none, 0, ReversalMode::Cycle);
        CHECK_THROWS_AS(filter_valid_classes(p, triangle(), none, ReversalMode::Cocycle),
                        std::invalid_argument);
    }
}

TEST_CASE("class counts are solid-set independent on the named instances") {
    const ConstraintSystem none;
    const std::map<ReversalMode, std::uint64_t> triangle_expected{
        {ReversalMode::Cycle, 7}, {ReversalMode::Cocycle, 4}, {ReversalMode::CycleCocycle, 3}};
    for (const auto& [mode, expected] : triangle_expected) {
        const CountReport report = verify_class_solid_set_independence(triangle(), none, mode);
        CHECK(report.verdict);
        for (const auto& [mask, count] : report.counts) CHECK(count == expected);
    }

    const ConstraintSystem reach_back({}, {{2, 0}});
    const std::map<ReversalMode, std::uint64_t> doubled_expected{
        {ReversalMode::Cycle, 6}, {ReversalMode::Cocycle, 10}, {ReversalMode::CycleCocycle, 5}};
    for (const auto& [mode, expected] : doubled_expected) {
        const CountReport report = verify_class_solid_set_independence(doubled_triangle(), reach_back, mode);
        CHECK(report.verdict);
        for (const auto& [mask, count] : report.counts) CHECK(count == expected);
    }
}

TEST_CASE("single-arc acyclicity constraint: classes count forests separating the pair") {
    // With A = {(u,v)} the valid cycle classes of orientations are counted by
    // the forests in which u and v lie in different trees.
    std::mt19937_64 rng(6060);
    for (int trial = 0; trial < 25; ++trial) {
        const Multigraph g = oracles::random_connected_graph(rng, 4, 5);
        if (g.vertex_count() < 2) continue;
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.vertex_count()));
        if (v == u) v = (v + 1) % g.vertex_count();
        const ConstraintSystem c({{u, v}}, {});

        const ClassPartition p = equivalence_classes(g, c, 0, ReversalMode::Cycle);
        std::uint64_t separating_forests = 0;
        const EdgeMask all = g.all_edges_mask();
        for (EdgeMask sub = 0;; ++sub) {
            if (oracles::forest_by_rank(g, sub)) {
                std::vector<Edge> edges;
                for (int e = 0; e < g.edge_count(); ++e) {
                    if ((sub >> e) & 1) edges.push_back(g.edge(e));
                }
                const auto labels = oracles::spread_components(g.vertex_count(), edges);
                if (labels[u] != labels[v]) ++separating_forests;
            }
            if (sub == all) break;
        }
        CHECK(p.classes.size() == separating_forests);
    }
}

TEST_CASE("outdegree signatures") {
    CHECK(outdegree_signature(phi(triangle(), "000")) == std::vector<int>{0, 0, 0});
    CHECK(outdegree_signature(phi(triangle(), "ffb")) == std::vector<int>{1, 1, 1});

    // Signatures are constant on cycle classes, and with no constraints the
    // number of distinct signatures over orientations equals the class count.
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 30; ++trial) {
        const Multigraph g = oracles::random_multigraph(rng, 5, 6);
        const ConstraintSystem none;
        const ClassPartition p = equivalence_classes(g, none, 0, ReversalMode::Cycle);
        std::set<std::vector<int>> signatures;
        std::map<int, std::vector<int>> class_signature;
        for (std::size_t i = 0; i < p.members.size(); ++i) {
            const std::vector<int> sig = outdegree_signature(p.members[i]);
            signatures.insert(sig);
            const auto [it, inserted] = class_signature.try_emplace(p.class_of[i], sig);
            if (!inserted) CHECK(it->second == sig);
        }
        CHECK(signatures.size() == p.classes.size());
    }
}

TEST_CASE("the flow along a fixed cycle is constant on cocycle classes") {
    std::mt19937_64 rng(616);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const Multigraph g = oracles::random_multigraph(rng, 4, 5);
        const ConstraintSystem c = oracles::random_constraints(rng, g.vertex_count(), 1, 1);
        const EdgeMask solid = rng() & g.all_edges_mask();
        ClassPartition p = [&] {
            return equivalence_classes(g, c, solid, ReversalMode::Cocycle);
        }();
        if (p.members.empty()) continue;

        // Candidate cycles of the underlying graph, taken from the all-2-way
        // realization; keep those avoiding the 0-way edges of a class.
        std::vector<EdgeConfig> two(static_cast<std::size_t>(g.edge_count()), EdgeConfig::TwoWay);
        const Fourientation all_two(g, std::move(two));
        const Digraph base = realize(all_two);
        const auto cycles = enumerate_directed_cycles(base);

        for (const DirectedCycle& cycle : cycles) {
            // Traversal direction per edge on this cycle.
            std::map<int, EdgeConfig> direction;
            EdgeMask support = 0;
            for (int i : cycle.arc_indices) {
                const Arc& a = base.arc(i);
                direction[a.label.index] = a.label.kind == ArcKind::EdgeForward
                                               ? EdgeConfig::Forward
                                               : EdgeConfig::Backward;
                support |= EdgeMask{1} << a.label.index;
            }
            std::map<int, int> class_flow;
            for (std::size_t i = 0; i < p.members.size(); ++i) {
                if ((p.members[i].zero_way_edges() & support) != 0) continue;
                int flow = 0;
                for (const auto& [e, dir] : direction) {
                    if (p.members[i].config(e) == dir) ++flow;
                }
                const auto [it, inserted] = class_flow.try_emplace(p.class_of[i], flow);
                if (!inserted) {
                    CHECK(it->second == flow);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("loop reversal merges the two loop directions") {
    const Multigraph loop(1, {{0, 0}});
    const ConstraintSystem none;
    const ClassPartition p = equivalence_classes(loop, none, 0, ReversalMode::Cycle);
    CHECK(p.members.size() == 2);
    CHECK(p.classes.size() == 1);
}

TEST_CASE("class enumeration respects the size guard") {
    std::vector<Edge> edges(15, Edge{0, 1});
    const Multigraph big(2, std::move(edges));
    CHECK_THROWS_AS(equivalence_classes(big, ConstraintSystem{}, 0, ReversalMode::Cycle),
                    size_guard_error);
}

TEST_CASE("reversal mode names") {
    CHECK(to_string(ReversalMode::Cycle) == "cyc");
    CHECK(reversal_mode_from_string("cc") == ReversalMode::CycleCocycle);
    CHECK_THROWS_AS(reversal_mode_from_string("nope"), std::invalid_argument);
}
