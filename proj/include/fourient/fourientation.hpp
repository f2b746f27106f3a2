#pragma once

#include <cstdint>
#include <vector>

#include "fourient/graph.hpp"

namespace fourient {

// Per-edge state relative to the edge's reference orientation. ZeroWay and
// TwoWay are the solid states; Forward and Backward are the 1-way states.
enum class EdgeConfig : std::uint8_t { ZeroWay = 0, Forward = 1, Backward = 2, TwoWay = 3 };

inline bool is_solid(EdgeConfig c) { return c == EdgeConfig::ZeroWay || c == EdgeConfig::TwoWay; }
inline bool is_one_way(EdgeConfig c) { return c == EdgeConfig::Forward || c == EdgeConfig::Backward; }
inline EdgeConfig flipped(EdgeConfig c) {
    if (c == EdgeConfig::Forward) return EdgeConfig::Backward;
    if (c == EdgeConfig::Backward) return EdgeConfig::Forward;
    return c;
}

// Immutable assignment of one EdgeConfig per edge of a multigraph. Cheap to
// copy and share; the referenced graph must outlive the fourientation.
class Fourientation {
public:
    Fourientation(const Multigraph& graph, std::vector<EdgeConfig> config);

    const Multigraph& graph() const { return *graph_; }
    EdgeConfig config(int e) const { return config_[static_cast<std::size_t>(e)]; }
    const std::vector<EdgeConfig>& configs() const { return config_; }

    EdgeMask solid_edges() const;
    EdgeMask two_way_edges() const;
    EdgeMask zero_way_edges() const;

    // Compact text form, one char per edge: '0' zero-way, 'f' forward,
    // 'b' backward, '2' two-way.
    std::string to_string() const;

    friend bool operator==(const Fourientation& x, const Fourientation& y) {
        return x.config_ == y.config_;
    }

private:
    const Multigraph* graph_;
    std::vector<EdgeConfig> config_;
};

struct VertexPair {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// The ordered-pair sets A and B. Duplicates within each list are dropped on
// construction (first occurrence kept); the same pair may appear in both
// lists, in which case no fourientation is valid.
class ConstraintSystem {
public:
    ConstraintSystem() = default;
    ConstraintSystem(std::vector<VertexPair> a, std::vector<VertexPair> b);

    const std::vector<VertexPair>& a() const { return a_; }
    const std::vector<VertexPair>& b() const { return b_; }
    bool empty() const { return a_.empty() && b_.empty(); }

    // Labels of every constraint arc, for cocycle enumeration.
    std::vector<ArcLabel> arc_labels() const;

private:
    std::vector<VertexPair> a_;
    std::vector<VertexPair> b_;
};

// The digraph of a fourientation: a ZeroWay edge contributes no arcs, a 1-way
// edge one arc, a TwoWay edge both.
Digraph realize(const Fourientation& phi);

// realize(phi) plus one labeled arc per constraint pair.
Digraph augment(const Fourientation& phi, const ConstraintSystem& c);

// Validity in the augmented digraph: every A arc acyclic, every B arc cyclic.
// Equivalently: for (u,v) in A the vertex v cannot reach u, for (u,v) in B it
// can, with reachability evaluated after adding all constraint arcs.
bool is_valid(const Fourientation& phi, const ConstraintSystem& c);

// The naive reading that evaluates reachability in realize(phi) alone,
// without the added arcs. Kept as a contrast case: it does not make
// orientation and subgraph counts agree.
bool is_valid_simple(const Fourientation& phi, const ConstraintSystem& c);

// Flips the 1-way edges along a directed cycle of realize(phi); 2-way edges
// on the cycle stay put. Throws std::invalid_argument("not a directed cycle")
// unless `cycle` chains head-to-tail through arcs of realize(phi), closes,
// and repeats no vertex or edge.
Fourientation reverse_cycle(const Fourientation& phi, const std::vector<Arc>& cycle);

// Flips the 1-way edges crossing the cut source_side | rest. The cut must be
// an (A,B)-cocycle of augment(phi, c) except that cuts whose crossing edges
// are all 0-way are accepted and act as the identity. Throws
// std::invalid_argument otherwise.
Fourientation reverse_cocycle(const Fourientation& phi, const ConstraintSystem& c,
                              VertexMask source_side);

// Cut sides V1 that form an (A,B)-cocycle of augment(phi, c) with at least
// one crossing arc, ascending by bitmask. These are the elementary cocycle
// reversal moves.
std::vector<VertexMask> ab_cocycle_cuts(const Fourientation& phi, const ConstraintSystem& c);

// True iff some graph cycle consists entirely of 2-way edges, i.e. the 2-way
// edge set is not a forest.
bool has_two_way_cycle(const Fourientation& phi);

// True iff some bipartition has a nonempty crossing edge set, every crossing
// edge 0-way, and no constraint pair split across the cut.
bool has_zero_way_cocycle(const Fourientation& phi, const ConstraintSystem& c);

// A = {(root,v) : v outside the component}, B = {(root,v) : v inside}; valid
// orientations are exactly those whose set of vertices reaching `root` is
// `component`.
ConstraintSystem constraints_root_component(const Multigraph& g, int root,
                                            const std::vector<int>& component);

// A = {}, B = X x Y; requires X and Y to cover the vertex set.
ConstraintSystem constraints_cover(const Multigraph& g, const std::vector<int>& x,
                                   const std::vector<int>& y);

}  // namespace fourient
