#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourient {

// Bitmask over edge indices (bit e = edge e). Callers keep |E| <= 64.
using EdgeMask = std::uint64_t;
// Bitmask over vertex ids (bit v = vertex v). Callers keep |V| <= 64.
using VertexMask = std::uint64_t;

// Thrown by operations whose exhaustive search would exceed the documented
// size limit; the message states the limit.
struct size_guard_error : std::runtime_error {
    explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
    int tail = 0;
    int head = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected multigraph: loops and parallel edges allowed. The (tail, head)
// order of each edge fixes its reference orientation, and the position in the
// edge list is the edge's identity.
class Multigraph {
public:
    Multigraph(int n_vertices, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    EdgeMask all_edges_mask() const;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Provenance of an arc: one of the two directions of a graph edge, or an
// added constraint pair.
enum class ArcKind : std::uint8_t { EdgeForward, EdgeBackward, ConstraintA, ConstraintB };

struct ArcLabel {
    ArcKind kind = ArcKind::EdgeForward;
    int index = 0;  // edge index, or position within the A / B list
    friend auto operator<=>(const ArcLabel&, const ArcLabel&) = default;
};

struct Arc {
    int tail = 0;
    int head = 0;
    ArcLabel label;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph {
public:
    Digraph(int n_vertices, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int i) const { return arcs_[static_cast<std::size_t>(i)]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Indices of arcs with the given tail.
    const std::vector<int>& out_arcs(int v) const { return out_[static_cast<std::size_t>(v)]; }

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

// Components are numbered along a topological order of the condensation:
// every arc goes from a lower (or equal) component id to a higher one.
struct SccDecomposition {
    std::vector<int> component_of;
    int component_count = 0;

    bool same_component(int u, int v) const {
        return component_of[static_cast<std::size_t>(u)] == component_of[static_cast<std::size_t>(v)];
    }
};

enum class ArcClass { Cyclic, Acyclic };

SccDecomposition scc(const Digraph& d);

// True iff `to` is reachable from `from` by a directed path (reflexive).
bool reaches(const Digraph& d, int from, int to);

// Cyclic iff the arc lies on a directed cycle, i.e. head reaches tail.
// Throws std::invalid_argument("unknown arc") if a is not an arc of d.
ArcClass classify_arc(const Digraph& d, const Arc& a);
ArcClass classify_arc(const Digraph& d, const SccDecomposition& s, int arc_index);

// A directed cycle: closed walk using each underlying edge entity at most
// once and each vertex at most once. The arc list starts at the cycle's
// smallest vertex; a loop arc is a cycle of length 1. The two opposite arcs
// of one 2-way edge never form a cycle, but two parallel edges do.
struct DirectedCycle {
    std::vector<int> arc_indices;
    friend auto operator<=>(const DirectedCycle&, const DirectedCycle&) = default;
};

// All directed cycles of d, sorted by (length, arc index list).
std::vector<DirectedCycle> enumerate_directed_cycles(const Digraph& d);

struct DirectedCocycle {
    VertexMask source_side = 0;      // V1 of the bipartition
    std::vector<int> crossing;       // arcs V1 -> V2, in index order
    friend auto operator<=>(const DirectedCocycle&, const DirectedCocycle&) = default;
};

// Every bipartition V1 | V2 with a nonempty crossing arc set, no arc of d
// from V2 to V1, and no forbidden-labeled arc across the cut in either
// direction. One entry per qualifying V1 bitmask, ascending. Enumerates all
// 2^|V| bipartitions; guarded at |V| <= 24.
std::vector<DirectedCocycle> enumerate_directed_cocycles(const Digraph& d,
                                                         const std::vector<ArcLabel>& forbidden);

struct VertexPartition {
    std::vector<int> component_of;  // numbered by first occurrence
    int count = 0;
    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

// Components of g's edges plus the extra vertex pairs.
VertexPartition connected_components(const Multigraph& g, const std::vector<Edge>& extra_edges);

// True iff the chosen edge subset contains no graph cycle; a loop or a
// parallel pair already counts as a cycle.
bool edge_subset_is_forest(const Multigraph& g, EdgeMask subset);

}  // namespace fourient
