#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fourient/enumeration.hpp"
#include "fourient/fourientation.hpp"
#include "fourient/graph.hpp"

namespace fourient {

// cyc: directed-cycle reversals; coc: (A,B)-cocycle reversals; cc: both.
enum class ReversalMode { Cycle, Cocycle, CycleCocycle };

std::string to_string(ReversalMode mode);
ReversalMode reversal_mode_from_string(const std::string& name);

struct EquivalenceClass {
    Fourientation representative;  // lexicographically smallest member config
    EdgeMask two_way_edges = 0;    // constant across the class
    EdgeMask zero_way_edges = 0;   // constant across the class
    std::uint64_t size = 0;
};

// Partition of the valid fourientations with a fixed solid set into orbits of
// the elementary reversal moves.
struct ClassPartition {
    ReversalMode mode = ReversalMode::Cycle;
    EdgeMask solid = 0;
    std::vector<EquivalenceClass> classes;    // ordered by representative config
    std::vector<Fourientation> members;       // enumeration order
    std::vector<int> class_of;                // member index -> class index
};

// Enumerates the valid fourientations with solid set `solid` and joins any
// two that differ by a single directed-cycle reversal (modes cyc, cc) or a
// single (A,B)-cocycle reversal (modes coc, cc). Repeated single moves
// generate the full equivalence, so connected components of the move graph
// are exactly the classes.
ClassPartition equivalence_classes(const Multigraph& g, const ConstraintSystem& c, EdgeMask solid,
                                   ReversalMode mode, int max_edges = kMaxEdgesAllSolidSets);

// Drops the classes whose 2-way edges contain a graph cycle (modes cyc, cc)
// or whose 0-way edges support an all-0-way constraint-free cut (modes coc,
// cc). Throws std::invalid_argument on mode mismatch.
ClassPartition filter_valid_classes(const ClassPartition& partition, const Multigraph& g,
                                    const ConstraintSystem& c, ReversalMode mode);

// Number of valid classes for every S subseteq E; verdict true iff constant.
CountReport verify_class_solid_set_independence(const Multigraph& g, const ConstraintSystem& c,
                                   ReversalMode mode, int max_edges = kMaxEdgesAllSolidSets);

// Per-vertex count of outgoing 1-way arcs; constant under cycle reversal.
std::vector<int> outdegree_signature(const Fourientation& phi);

}  // namespace fourient
