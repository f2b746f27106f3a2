#include "fourient/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "internal.hpp"

namespace fourient {

std::string to_string(ReversalMode mode) {
    switch (mode) {
        case ReversalMode::Cycle: return "cyc";
        case ReversalMode::Cocycle: return "coc";
        case ReversalMode::CycleCocycle: return "cc";
    }
    return "?";
}

ReversalMode reversal_mode_from_string(const std::string& name) {
    if (name == "cyc") return ReversalMode::Cycle;
    if (name == "coc") return ReversalMode::Cocycle;
    if (name == "cc") return ReversalMode::CycleCocycle;
    throw std::invalid_argument("unknown reversal mode '" + name + "' (expected cyc, coc or cc)");
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

detail::PackedConfig apply_cycle_flips(const Digraph& realized, detail::PackedConfig packed,
                                       const DirectedCycle& cycle) {
    for (int i : cycle.arc_indices) {
        const Arc& a = realized.arc(i);
        const int e = a.label.index;
        const EdgeConfig c = detail::packed_get(packed, e);
        if (is_one_way(c)) packed = detail::packed_set(packed, e, flipped(c));
    }
    return packed;
}

detail::PackedConfig apply_cut_flips(const Multigraph& g, detail::PackedConfig packed,
                                     VertexMask side) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (((side >> edge.tail) & 1) != ((side >> edge.head) & 1)) {
            const EdgeConfig c = detail::packed_get(packed, e);
            if (is_one_way(c)) packed = detail::packed_set(packed, e, flipped(c));
        }
    }
    return packed;
}

}  // namespace

ClassPartition equivalence_classes(const Multigraph& g, const ConstraintSystem& c, EdgeMask solid,
                                   ReversalMode mode, int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges) {
        throw size_guard_error("class enumeration is limited to " + std::to_string(max_edges) +
                               " edges (got " + std::to_string(m) + ")");
    }
    solid &= g.all_edges_mask();

    // Valid members in lexicographic (= enumeration) order.
    detail::ValidityKernel kernel(g, c);
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<std::int64_t> member_of_rank(total, -1);
    std::vector<detail::PackedConfig> members;
    for (std::uint64_t k = 0; k < total; ++k) {
        const detail::PackedConfig packed = detail::packed_config_at(solid, m, k);
        if (kernel.valid(packed)) {
            member_of_rank[k] = static_cast<std::int64_t>(members.size());
            members.push_back(packed);
        }
    }

    const bool with_cycles = mode == ReversalMode::Cycle || mode == ReversalMode::CycleCocycle;
    const bool with_cuts = mode == ReversalMode::Cocycle || mode == ReversalMode::CycleCocycle;

    Dsu dsu(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) {
        const detail::PackedConfig packed = members[i];
        const Fourientation phi = detail::unpack(g, packed);
        const auto join = [&](detail::PackedConfig other) {
            const std::int64_t j = member_of_rank[detail::rank_of_packed(m, other)];
            if (j < 0) {
                // A reversal move never leaves the valid set: validity and the solid
                // set are both preserved, so a miss here is a bug.
                throw std::logic_error("reversal move left the valid set");
            }
            dsu.unite(static_cast<int>(i), static_cast<int>(j));
        };
        if (with_cycles) {
            const Digraph realized = realize(phi);
            for (const DirectedCycle& cycle : enumerate_directed_cycles(realized)) {
                join(apply_cycle_flips(realized, packed, cycle));
            }
        }
        if (with_cuts) {
            for (VertexMask side : ab_cocycle_cuts(phi, c)) {
                join(apply_cut_flips(g, packed, side));
            }
        }
    }

    ClassPartition partition;
    partition.mode = mode;
    partition.solid = solid;
    partition.members.reserve(members.size());
    partition.class_of.assign(members.size(), -1);

    // Members are enumerated smallest-config first, so the first member of
    // each orbit is its representative and orbit discovery order sorts the
    // classes by representative.
    std::map<int, int> class_of_root;
    for (std::size_t i = 0; i < members.size(); ++i) {
        partition.members.push_back(detail::unpack(g, members[i]));
        const int root = dsu.find(static_cast<int>(i));
        auto [it, inserted] = class_of_root.try_emplace(root, static_cast<int>(partition.classes.size()));
        if (inserted) {
            const Fourientation& rep = partition.members.back();
            partition.classes.push_back(
                {rep, rep.two_way_edges(), rep.zero_way_edges(), 0});
        }
        partition.class_of[i] = it->second;
        ++partition.classes[static_cast<std::size_t>(it->second)].size;
    }
    return partition;
}

ClassPartition filter_valid_classes(const ClassPartition& partition,
                                    [[maybe_unused]] const Multigraph& g,
                                    const ConstraintSystem& c, ReversalMode mode) {
    if (mode != partition.mode) {
        throw std::invalid_argument("mode mismatch: partition was built for " +
                                    to_string(partition.mode));
    }
    const bool drop_two_way = mode == ReversalMode::Cycle || mode == ReversalMode::CycleCocycle;
    const bool drop_zero_way = mode == ReversalMode::Cocycle || mode == ReversalMode::CycleCocycle;

    std::vector<int> new_index(partition.classes.size(), -1);
    ClassPartition filtered;
    filtered.mode = partition.mode;
    filtered.solid = partition.solid;
    for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const EquivalenceClass& cls = partition.classes[i];
        if (drop_two_way && has_two_way_cycle(cls.representative)) continue;
        if (drop_zero_way && has_zero_way_cocycle(cls.representative, c)) continue;
        new_index[i] = static_cast<int>(filtered.classes.size());
        filtered.classes.push_back(cls);
    }
    for (std::size_t i = 0; i < partition.members.size(); ++i) {
        const int mapped = new_index[static_cast<std::size_t>(partition.class_of[i])];
        if (mapped < 0) continue;
        filtered.members.push_back(partition.members[i]);
        filtered.class_of.push_back(mapped);
    }
    return filtered;
}

CountReport verify_class_solid_set_independence(const Multigraph& g, const ConstraintSystem& c,
                                   ReversalMode mode, int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges) {
        throw size_guard_error("class verification is limited to " + std::to_string(max_edges) +
                               " edges (got " + std::to_string(m) + ")");
    }
    CountReport report;
    const EdgeMask all = g.all_edges_mask();
    for (EdgeMask solid = 0;; ++solid) {
        const ClassPartition partition = equivalence_classes(g, c, solid, mode, max_edges);
        const ClassPartition valid = filter_valid_classes(partition, g, c, mode);
        report.counts.emplace_back(solid, static_cast<std::uint64_t>(valid.classes.size()));
        if (solid == all) break;
    }
    report.verdict = std::all_of(report.counts.begin(), report.counts.end(),
                                 [&](const auto& entry) {
                                     return entry.second == report.counts.front().second;
                                 });
    return report;
}

std::vector<int> outdegree_signature(const Fourientation& phi) {
    const Multigraph& g = phi.graph();
    std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (phi.config(e) == EdgeConfig::Forward) ++out[static_cast<std::size_t>(edge.tail)];
        if (phi.config(e) == EdgeConfig::Backward) ++out[static_cast<std::size_t>(edge.head)];
    }
    return out;
}

}  // namespace fourient
