#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fourient/fourientation.hpp"
#include "fourient/graph.hpp"

namespace fourient {

// All 2^|E| fourientations whose solid set equals `solid`: each solid edge
// is ZeroWay or TwoWay, each other edge Forward or Backward. Indexable in
// lexicographic config order, so ranges partition cleanly for parallel runs.
class FourientationRange {
public:
    FourientationRange(const Multigraph& g, EdgeMask solid);

    std::uint64_t size() const { return std::uint64_t{1} << graph_->edge_count(); }
    Fourientation at(std::uint64_t k) const;

    class Iterator {
    public:
        Iterator(const FourientationRange* range, std::uint64_t k) : range_(range), k_(k) {}
        Fourientation operator*() const { return range_->at(k_); }
        Iterator& operator++() { ++k_; return *this; }
        friend bool operator==(const Iterator& a, const Iterator& b) { return a.k_ == b.k_; }

    private:
        const FourientationRange* range_;
        std::uint64_t k_;
    };

    Iterator begin() const { return Iterator(this, 0); }
    Iterator end() const { return Iterator(this, size()); }

private:
    const Multigraph* graph_;
    EdgeMask solid_;
};

// Per-solid-set counts plus the all-equal verdict.
struct CountReport {
    std::vector<std::pair<EdgeMask, std::uint64_t>> counts;  // ascending by mask
    bool verdict = false;
};

inline constexpr int kMaxEdgesSingleCount = 24;
inline constexpr int kMaxEdgesAllSolidSets = 14;

// |{phi with solid set `solid` : is_valid(phi, c)}|. Guarded at
// |E| <= kMaxEdgesSingleCount; `threads` splits the search range into
// contiguous chunks whose counts are summed in order.
std::uint64_t count_valid(const Multigraph& g, const ConstraintSystem& c, EdgeMask solid,
                          int threads = 1);

// count_valid for every S subseteq E, ascending by bitmask; verdict true iff
// all counts agree (the S = 0 and S = all entries compare orientations with
// subgraphs). Guarded at |E| <= max_edges.
CountReport verify_solid_set_independence(const Multigraph& g, const ConstraintSystem& c,
                                int max_edges = kMaxEdgesAllSolidSets, int threads = 1);

bool is_forest(const Multigraph& g, EdgeMask subset);

// True iff the subgraph plus the undirected constraint pairs has the same
// components as the whole graph plus those pairs.
bool is_ab_connected(const Multigraph& g, EdgeMask subset, const ConstraintSystem& c);

enum class SubgraphFamily { Forests, AbConnected, AbConnectedForests };

// Counts edge subsets in the family, viewed as all-solid fourientations;
// with require_valid, only the (A,B)-valid ones.
std::uint64_t count_subgraph_family(const Multigraph& g, const ConstraintSystem& c,
                                    SubgraphFamily family, bool require_valid);

}  // namespace fourient
