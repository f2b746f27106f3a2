#include "fourient/fourientation.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fourient {

Fourientation::Fourientation(const Multigraph& graph, std::vector<EdgeConfig> config)
    : graph_(&graph), config_(std::move(config)) {
    if (static_cast<int>(config_.size()) != graph.edge_count()) {
        throw std::invalid_argument("config length " + std::to_string(config_.size()) +
                                    " does not match edge count " +
                                    std::to_string(graph.edge_count()));
    }
}

EdgeMask Fourientation::solid_edges() const {
    EdgeMask mask = 0;
    for (std::size_t e = 0; e < config_.size(); ++e) {
        if (is_solid(config_[e])) mask |= EdgeMask{1} << e;
    }
    return mask;
}

EdgeMask Fourientation::two_way_edges() const {
    EdgeMask mask = 0;
    for (std::size_t e = 0; e < config_.size(); ++e) {
        if (config_[e] == EdgeConfig::TwoWay) mask |= EdgeMask{1} << e;
    }
    return mask;
}

EdgeMask Fourientation::zero_way_edges() const {
    EdgeMask mask = 0;
    for (std::size_t e = 0; e < config_.size(); ++e) {
        if (config_[e] == EdgeConfig::ZeroWay) mask |= EdgeMask{1} << e;
    }
    return mask;
}

std::string Fourientation::to_string() const {
    static constexpr char kLetters[] = {'0', 'f', 'b', '2'};
    std::string s;
    s.reserve(config_.size());
    for (EdgeConfig c : config_) s.push_back(kLetters[static_cast<int>(c)]);
    return s;
}

namespace {

std::vector<VertexPair> dedup_keep_order(std::vector<VertexPair> pairs) {
    std::vector<VertexPair> out;
    std::set<VertexPair> seen;
    for (const VertexPair& p : pairs) {
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

}  // namespace

ConstraintSystem::ConstraintSystem(std::vector<VertexPair> a, std::vector<VertexPair> b)
    : a_(dedup_keep_order(std::move(a))), b_(dedup_keep_order(std::move(b))) {}

std::vector<ArcLabel> ConstraintSystem::arc_labels() const {
    std::vector<ArcLabel> labels;
    labels.reserve(a_.size() + b_.size());
    for (int i = 0; i < static_cast<int>(a_.size()); ++i)
        labels.push_back({ArcKind::ConstraintA, i});
    for (int i = 0; i < static_cast<int>(b_.size()); ++i)
        labels.push_back({ArcKind::ConstraintB, i});
    return labels;
}

Digraph realize(const Fourientation& phi) {
    const Multigraph& g = phi.graph();
    std::vector<Arc> arcs;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const EdgeConfig c = phi.config(e);
        if (c == EdgeConfig::Forward || c == EdgeConfig::TwoWay) {
            arcs.push_back({edge.tail, edge.head, {ArcKind::EdgeForward, e}});
        }
        if (c == EdgeConfig::Backward || c == EdgeConfig::TwoWay) {
            arcs.push_back({edge.head, edge.tail, {ArcKind::EdgeBackward, e}});
        }
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

Digraph augment(const Fourientation& phi, const ConstraintSystem& c) {
    const Multigraph& g = phi.graph();
    std::vector<Arc> arcs = realize(phi).arcs();
    for (int i = 0; i < static_cast<int>(c.a().size()); ++i) {
        arcs.push_back({c.a()[static_cast<std::size_t>(i)].u, c.a()[static_cast<std::size_t>(i)].v,
                        {ArcKind::ConstraintA, i}});
    }
    for (int i = 0; i < static_cast<int>(c.b().size()); ++i) {
        arcs.push_back({c.b()[static_cast<std::size_t>(i)].u, c.b()[static_cast<std::size_t>(i)].v,
                        {ArcKind::ConstraintB, i}});
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

bool is_valid(const Fourientation& phi, const ConstraintSystem& c) {
    if (c.empty()) return true;
    const Digraph d = augment(phi, c);
    const SccDecomposition components = scc(d);
    for (const VertexPair& p : c.a()) {
        if (components.same_component(p.u, p.v)) return false;
    }
    for (const VertexPair& p : c.b()) {
        if (!components.same_component(p.u, p.v)) return false;
    }
    return true;
}

bool is_valid_simple(const Fourientation& phi, const ConstraintSystem& c) {
    if (c.empty()) return true;
    const Digraph d = realize(phi);
    for (const VertexPair& p : c.a()) {
        if (reaches(d, p.v, p.u)) return false;
    }
    for (const VertexPair& p : c.b()) {
        if (!reaches(d, p.v, p.u)) return false;
    }
    return true;
}

namespace {

[[noreturn]] void bad_cycle() { throw std::invalid_argument("not a directed cycle"); }

// Checks that the arc exists in realize(phi) and matches its label.
void check_realized_arc(const Fourientation& phi, const Arc& a) {
    const Multigraph& g = phi.graph();
    if (a.label.index < 0 || a.label.index >= g.edge_count()) bad_cycle();
    const Edge& edge = g.edge(a.label.index);
    const EdgeConfig c = phi.config(a.label.index);
    switch (a.label.kind) {
        case ArcKind::EdgeForward:
            if (a.tail != edge.tail || a.head != edge.head) bad_cycle();
            if (c != EdgeConfig::Forward && c != EdgeConfig::TwoWay) bad_cycle();
            break;
        case ArcKind::EdgeBackward:
            if (a.tail != edge.head || a.head != edge.tail) bad_cycle();
            if (c != EdgeConfig::Backward && c != EdgeConfig::TwoWay) bad_cycle();
            break;
        default:
            bad_cycle();  // constraint arcs never lie on a cycle of realize(phi)
    }
}

}  // namespace

Fourientation reverse_cycle(const Fourientation& phi, const std::vector<Arc>& cycle) {
    if (cycle.empty()) bad_cycle();
    std::set<int> vertices;
    std::set<int> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Arc& a = cycle[i];
        check_realized_arc(phi, a);
        if (a.head != cycle[(i + 1) % cycle.size()].tail) bad_cycle();
        if (!edges.insert(a.label.index).second) bad_cycle();
        // Tails are pairwise distinct in a vertex-simple cycle; this also
        // covers the single loop arc and rejects loops inside longer walks.
        if (!vertices.insert(a.tail).second) bad_cycle();
    }
    std::vector<EdgeConfig> config = phi.configs();
    for (const Arc& a : cycle) {
        config[static_cast<std::size_t>(a.label.index)] =
            flipped(config[static_cast<std::size_t>(a.label.index)]);
    }
    return Fourientation(phi.graph(), std::move(config));
}

namespace {

struct CutScan {
    bool directed_ok = true;       // no arc of the augmented digraph crosses backward
    bool constraint_crosses = false;
    int crossing_one_way = 0;
    int crossing_edges = 0;
};

CutScan scan_cut(const Fourientation& phi, const ConstraintSystem& c, VertexMask side) {
    const Multigraph& g = phi.graph();
    CutScan scan;
    for (int e = 0; e < g.edge_count() && scan.directed_ok; ++e) {
        const Edge& edge = g.edge(e);
        const bool tail_in = (side >> edge.tail) & 1;
        const bool head_in = (side >> edge.head) & 1;
        if (tail_in == head_in) continue;
        ++scan.crossing_edges;
        switch (phi.config(e)) {
            case EdgeConfig::ZeroWay:
                break;
            case EdgeConfig::TwoWay:
                scan.directed_ok = false;
                break;
            case EdgeConfig::Forward:
                if (tail_in) ++scan.crossing_one_way;
                else scan.directed_ok = false;
                break;
            case EdgeConfig::Backward:
                if (head_in) ++scan.crossing_one_way;
                else scan.directed_ok = false;
                break;
        }
    }
    for (const VertexPair& p : c.a()) {
        if (((side >> p.u) & 1) != ((side >> p.v) & 1)) scan.constraint_crosses = true;
    }
    for (const VertexPair& p : c.b()) {
        if (((side >> p.u) & 1) != ((side >> p.v) & 1)) scan.constraint_crosses = true;
    }
    return scan;
}

}  // namespace

Fourientation reverse_cocycle(const Fourientation& phi, const ConstraintSystem& c,
                              VertexMask side) {
    const CutScan scan = scan_cut(phi, c, side);
    if (!scan.directed_ok || scan.constraint_crosses || scan.crossing_edges == 0) {
        throw std::invalid_argument("cut is not an (A,B)-cocycle of the augmented digraph");
    }
    const Multigraph& g = phi.graph();
    std::vector<EdgeConfig> config = phi.configs();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (((side >> edge.tail) & 1) != ((side >> edge.head) & 1)) {
            config[static_cast<std::size_t>(e)] = flipped(config[static_cast<std::size_t>(e)]);
        }
    }
    return Fourientation(g, std::move(config));
}

std::vector<VertexMask> ab_cocycle_cuts(const Fourientation& phi, const ConstraintSystem& c) {
    const int n = phi.graph().vertex_count();
    if (n > 24) {
        throw size_guard_error("cocycle cuts iterate 2^|V| bipartitions; limit is |V| <= 24");
    }
    std::vector<VertexMask> cuts;
    const VertexMask limit = VertexMask{1} << n;
    for (VertexMask side = 0; side < limit; ++side) {
        const CutScan scan = scan_cut(phi, c, side);
        if (scan.directed_ok && !scan.constraint_crosses && scan.crossing_one_way > 0) {
            cuts.push_back(side);
        }
    }
    return cuts;
}

bool has_two_way_cycle(const Fourientation& phi) {
    return !edge_subset_is_forest(phi.graph(), phi.two_way_edges());
}

bool has_zero_way_cocycle(const Fourientation& phi, const ConstraintSystem& c) {
    const int n = phi.graph().vertex_count();
    if (n > 24) {
        throw size_guard_error("cut enumeration iterates 2^|V| bipartitions; limit is |V| <= 24");
    }
    const Multigraph& g = phi.graph();
    const VertexMask limit = VertexMask{1} << n;
    for (VertexMask side = 1; side + 1 < limit; ++side) {
        int crossing = 0;
        bool all_zero_way = true;
        for (int e = 0; e < g.edge_count() && all_zero_way; ++e) {
            const Edge& edge = g.edge(e);
            if (((side >> edge.tail) & 1) == ((side >> edge.head) & 1)) continue;
            ++crossing;
            if (phi.config(e) != EdgeConfig::ZeroWay) all_zero_way = false;
        }
        if (!all_zero_way || crossing == 0) continue;
        bool constraint_crosses = false;
        for (const VertexPair& p : c.a()) {
            if (((side >> p.u) & 1) != ((side >> p.v) & 1)) constraint_crosses = true;
        }
        for (const VertexPair& p : c.b()) {
            if (((side >> p.u) & 1) != ((side >> p.v) & 1)) constraint_crosses = true;
        }
        if (!constraint_crosses) return true;
    }
    return false;
}

ConstraintSystem constraints_root_component(const Multigraph& g, int root,
                                            const std::vector<int>& component) {
    const int n = g.vertex_count();
    std::vector<bool> in_component(static_cast<std::size_t>(n), false);
    for (int v : component) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("component vertex " + std::to_string(v) + " out of range");
        }
        in_component[static_cast<std::size_t>(v)] = true;
    }
    if (root < 0 || root >= n || !in_component[static_cast<std::size_t>(root)]) {
        throw std::invalid_argument("root must belong to the component");
    }
    std::vector<VertexPair> a;
    std::vector<VertexPair> b;
    for (int v = 0; v < n; ++v) {
        (in_component[static_cast<std::size_t>(v)] ? b : a).push_back({root, v});
    }
    return ConstraintSystem(std::move(a), std::move(b));
}

ConstraintSystem constraints_cover(const Multigraph& g, const std::vector<int>& x,
                                   const std::vector<int>& y) {
    const int n = g.vertex_count();
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const std::vector<int>* part : {&x, &y}) {
        for (int v : *part) {
            if (v < 0 || v >= n) {
                throw std::invalid_argument("cover vertex " + std::to_string(v) + " out of range");
            }
            covered[static_cast<std::size_t>(v)] = true;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!covered[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("X and Y must cover every vertex; vertex " +
                                        std::to_string(v) + " is missing");
        }
    }
    std::vector<VertexPair> b;
    for (int xv : x) {
        for (int yv : y) b.push_back({xv, yv});
    }
    return ConstraintSystem({}, std::move(b));
}

}  // namespace fourient
