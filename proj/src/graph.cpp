#include "fourient/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fourient {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + " endpoint " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
    }
}

}  // namespace

Multigraph::Multigraph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (const Edge& e : edges_) {
        check_vertex(e.tail, n_, "edge");
        check_vertex(e.head, n_, "edge");
    }
}

EdgeMask Multigraph::all_edges_mask() const {
    const int m = edge_count();
    return m >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << m) - 1;
}

Digraph::Digraph(int n_vertices, std::vector<Arc> arcs)
    : n_(n_vertices), arcs_(std::move(arcs)), out_(static_cast<std::size_t>(n_vertices)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<ArcLabel> labels;
    labels.reserve(arcs_.size());
    for (int i = 0; i < arc_count(); ++i) {
        const Arc& a = arcs_[static_cast<std::size_t>(i)];
        check_vertex(a.tail, n_, "arc");
        check_vertex(a.head, n_, "arc");
        out_[static_cast<std::size_t>(a.tail)].push_back(i);
        labels.push_back(a.label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw std::invalid_argument("arc labels must be unique");
    }
}

SccDecomposition scc(const Digraph& d) {
    const int n = d.vertex_count();
    SccDecomposition result;
    result.component_of.assign(static_cast<std::size_t>(n), -1);

    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    stack.reserve(static_cast<std::size_t>(n));

    struct Frame {
        int vertex;
        std::size_t next_out;
    };
    std::vector<Frame> frames;
    int next_index = 0;
    int emitted = 0;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            const int v = frames.back().vertex;
            if (frames.back().next_out == 0) {
                index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
                stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = true;
            }
            const auto& out = d.out_arcs(v);
            bool descended = false;
            while (frames.back().next_out < out.size()) {
                const int w = d.arc(out[frames.back().next_out]).head;
                ++frames.back().next_out;
                if (index[static_cast<std::size_t>(w)] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                const int c = emitted++;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    result.component_of[static_cast<std::size_t>(w)] = c;
                    if (w == v) break;
                }
            }
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().vertex;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            }
        }
    }

    // Tarjan emits components sinks-first; flip so ids follow a topological
    // order of the condensation.
    for (int& c : result.component_of) c = emitted - 1 - c;
    result.component_count = emitted;
    return result;
}

bool reaches(const Digraph& d, int from, int to) {
    const int n = d.vertex_count();
    check_vertex(from, n, "reaches");
    check_vertex(to, n, "reaches");
    if (from == to) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue{from};
    seen[static_cast<std::size_t>(from)] = true;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int i : d.out_arcs(v)) {
            const int w = d.arc(i).head;
            if (w == to) return true;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

ArcClass classify_arc(const Digraph& d, const SccDecomposition& s, int arc_index) {
    const Arc& a = d.arc(arc_index);
    return s.same_component(a.tail, a.head) ? ArcClass::Cyclic : ArcClass::Acyclic;
}

ArcClass classify_arc(const Digraph& d, const Arc& a) {
    const auto& arcs = d.arcs();
    if (std::find(arcs.begin(), arcs.end(), a) == arcs.end()) {
        throw std::invalid_argument("unknown arc");
    }
    if (a.tail == a.head) return ArcClass::Cyclic;
    const SccDecomposition s = scc(d);
    return s.same_component(a.tail, a.head) ? ArcClass::Cyclic : ArcClass::Acyclic;
}

namespace {

// Underlying edge entity of an arc; the two directions of one graph edge
// share an entity, each constraint arc is its own.
int arc_entity(const Arc& a, int edge_count) {
    switch (a.label.kind) {
        case ArcKind::EdgeForward:
        case ArcKind::EdgeBackward:
            return a.label.index;
        case ArcKind::ConstraintA:
            return edge_count + 2 * a.label.index;
        case ArcKind::ConstraintB:
            return edge_count + 2 * a.label.index + 1;
    }
    return -1;
}

struct CycleSearch {
    const Digraph& d;
    int entity_count;
    std::vector<int> entity;       // per arc
    std::vector<bool> entity_used;
    std::vector<bool> vertex_used;
    std::vector<int> path;
    std::vector<DirectedCycle> found;

    explicit CycleSearch(const Digraph& dg) : d(dg) {
        int max_entity = 0;
        entity.reserve(static_cast<std::size_t>(d.arc_count()));
        for (const Arc& a : d.arcs()) {
            // Edge count is not known here; derive a safe bound from labels.
            max_entity = std::max(max_entity, a.label.index);
        }
        const int base = max_entity + 1;
        for (const Arc& a : d.arcs()) entity.push_back(arc_entity(a, base));
        entity_count = 3 * base + 2;
        entity_used.assign(static_cast<std::size_t>(entity_count), false);
        vertex_used.assign(static_cast<std::size_t>(d.vertex_count()), false);
    }

    void dfs(int start, int v) {
        for (int i : d.out_arcs(v)) {
            const Arc& a = d.arc(i);
            if (a.head == a.tail) continue;  // loops are handled as length-1 cycles
            const int ent = entity[static_cast<std::size_t>(i)];
            if (entity_used[static_cast<std::size_t>(ent)]) continue;
            if (a.head == start) {
                path.push_back(i);
                found.push_back({path});
                path.pop_back();
                continue;
            }
            // Restricting to vertices above the start reports each cycle once,
            // rooted at its smallest vertex.
            if (a.head < start || vertex_used[static_cast<std::size_t>(a.head)]) continue;
            vertex_used[static_cast<std::size_t>(a.head)] = true;
            entity_used[static_cast<std::size_t>(ent)] = true;
            path.push_back(i);
            dfs(start, a.head);
            path.pop_back();
            entity_used[static_cast<std::size_t>(ent)] = false;
            vertex_used[static_cast<std::size_t>(a.head)] = false;
        }
    }
};

}  // namespace

std::vector<DirectedCycle> enumerate_directed_cycles(const Digraph& d) {
    CycleSearch search(d);
    for (int i = 0; i < d.arc_count(); ++i) {
        const Arc& a = d.arc(i);
        if (a.tail == a.head) search.found.push_back({{i}});
    }
    for (int s = 0; s < d.vertex_count(); ++s) {
        search.vertex_used[static_cast<std::size_t>(s)] = true;
        search.dfs(s, s);
        search.vertex_used[static_cast<std::size_t>(s)] = false;
    }
    std::sort(search.found.begin(), search.found.end(),
              [](const DirectedCycle& x, const DirectedCycle& y) {
                  if (x.arc_indices.size() != y.arc_indices.size())
                      return x.arc_indices.size() < y.arc_indices.size();
                  return x.arc_indices < y.arc_indices;
              });
    return search.found;
}

std::vector<DirectedCocycle> enumerate_directed_cocycles(const Digraph& d,
                                                         const std::vector<ArcLabel>& forbidden) {
    const int n = d.vertex_count();
    if (n > 24) {
        throw size_guard_error("cocycle enumeration iterates 2^|V| bipartitions; limit is |V| <= 24");
    }
    std::vector<ArcLabel> sorted_forbidden(forbidden);
    std::sort(sorted_forbidden.begin(), sorted_forbidden.end());
    const auto is_forbidden = [&](const ArcLabel& l) {
        return std::binary_search(sorted_forbidden.begin(), sorted_forbidden.end(), l);
    };

    std::vector<DirectedCocycle> result;
    const VertexMask limit = n >= 64 ? 0 : (VertexMask{1} << n);
    for (VertexMask side = 0; side < limit; ++side) {
        std::vector<int> crossing;
        bool ok = true;
        for (int i = 0; i < d.arc_count() && ok; ++i) {
            const Arc& a = d.arc(i);
            const bool tail_in = (side >> a.tail) & 1;
            const bool head_in = (side >> a.head) & 1;
            if (tail_in == head_in) continue;
            if (!tail_in) {
                ok = false;  // arc from V2 to V1
            } else if (is_forbidden(a.label)) {
                ok = false;
            } else {
                crossing.push_back(i);
            }
        }
        if (ok && !crossing.empty()) {
            result.push_back({side, std::move(crossing)});
        }
    }
    return result;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // Returns false if the endpoints were already connected.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

VertexPartition connected_components(const Multigraph& g, const std::vector<Edge>& extra_edges) {
    const int n = g.vertex_count();
    Dsu dsu(n);
    for (const Edge& e : g.edges()) dsu.unite(e.tail, e.head);
    for (const Edge& e : extra_edges) {
        check_vertex(e.tail, n, "extra edge");
        check_vertex(e.head, n, "extra edge");
        dsu.unite(e.tail, e.head);
    }
    VertexPartition part;
    part.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int root = dsu.find(v);
        if (id_of_root[static_cast<std::size_t>(root)] == -1) {
            id_of_root[static_cast<std::size_t>(root)] = part.count++;
        }
        part.component_of[static_cast<std::size_t>(v)] = id_of_root[static_cast<std::size_t>(root)];
    }
    return part;
}

bool edge_subset_is_forest(const Multigraph& g, EdgeMask subset) {
    Dsu dsu(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!((subset >> e) & 1)) continue;
        const Edge& edge = g.edge(e);
        if (edge.tail == edge.head) return false;
        if (!dsu.unite(edge.tail, edge.head)) return false;
    }
    return true;
}

}  // namespace fourient
