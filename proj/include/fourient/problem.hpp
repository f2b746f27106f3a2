#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourient/fourientation.hpp"
#include "fourient/graph.hpp"

namespace fourient {

// Raised on malformed problem input; the message names the offending field.
struct problem_error : std::runtime_error {
    explicit problem_error(const std::string& what) : std::runtime_error(what) {}
};

// A problem document:
//   {"name": "...", "vertices": n, "edges": [[t,h],...],
//    "A": [[u,v],...], "B": [[u,v],...]}
// A and B default to empty; everything else is required.
struct ProblemFile {
    std::string name;
    int vertices = 0;
    std::vector<Edge> edges;
    std::vector<VertexPair> a_pairs;
    std::vector<VertexPair> b_pairs;

    static ProblemFile parse_text(const std::string& json_text);
    static ProblemFile load(const std::string& path);

    Multigraph graph() const { return Multigraph(vertices, edges); }
    ConstraintSystem constraints() const { return ConstraintSystem(a_pairs, b_pairs); }

    // Canonical serialization of the inputs.
    std::string canonical_json() const;
    // FNV-1a 64 over canonical_json(), as fixed-width hex.
    std::string digest() const;
};

// A solid-edge specification from the command line: "none", "all", "every",
// or a comma-separated list of edge indices. `mask` is empty for "every".
struct SolidSpec {
    std::string text;
    std::optional<EdgeMask> mask;  // nullopt means every subset
};

SolidSpec parse_solid_spec(const std::string& text, int edge_count);

}  // namespace fourient
