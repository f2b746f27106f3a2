#pragma once

// Shared hot-loop machinery for the exhaustive counters: packed 2-bit edge
// configs and bitmask reachability, so the outer 2^|E| loops never touch the
// Digraph machinery. Not part of the public headers.

#include <bit>
#include <cstdint>
#include <vector>

#include "fourient/fourientation.hpp"
#include "fourient/graph.hpp"

namespace fourient::detail {

using PackedConfig = std::uint64_t;  // 2 bits per edge, edge e at bits [2e, 2e+1]

inline EdgeConfig packed_get(PackedConfig packed, int e) {
    return static_cast<EdgeConfig>((packed >> (2 * e)) & 3);
}

inline PackedConfig packed_set(PackedConfig packed, int e, EdgeConfig c) {
    packed &= ~(PackedConfig{3} << (2 * e));
    return packed | (static_cast<PackedConfig>(c) << (2 * e));
}

inline PackedConfig pack(const Fourientation& phi) {
    PackedConfig packed = 0;
    for (int e = 0; e < phi.graph().edge_count(); ++e) {
        packed |= static_cast<PackedConfig>(phi.config(e)) << (2 * e);
    }
    return packed;
}

inline Fourientation unpack(const Multigraph& g, PackedConfig packed) {
    std::vector<EdgeConfig> config(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) config[static_cast<std::size_t>(e)] = packed_get(packed, e);
    return Fourientation(g, std::move(config));
}

// The k-th fourientation with the given solid set, 0 <= k < 2^m, in
// lexicographic config order (edge 0 varies slowest; ZeroWay before TwoWay,
// Forward before Backward).
inline PackedConfig packed_config_at(EdgeMask solid, int m, std::uint64_t k) {
    PackedConfig packed = 0;
    for (int e = 0; e < m; ++e) {
        const std::uint64_t bit = (k >> (m - 1 - e)) & 1;
        EdgeConfig c;
        if ((solid >> e) & 1) {
            c = bit ? EdgeConfig::TwoWay : EdgeConfig::ZeroWay;
        } else {
            c = bit ? EdgeConfig::Backward : EdgeConfig::Forward;
        }
        packed |= static_cast<PackedConfig>(c) << (2 * e);
    }
    return packed;
}

// Inverse of packed_config_at; the per-edge bit encodes the second choice in
// either the solid (TwoWay) or the 1-way (Backward) pair.
inline std::uint64_t rank_of_packed(int m, PackedConfig packed) {
    std::uint64_t k = 0;
    for (int e = 0; e < m; ++e) {
        const EdgeConfig c = packed_get(packed, e);
        const std::uint64_t bit = (c == EdgeConfig::TwoWay || c == EdgeConfig::Backward) ? 1 : 0;
        k |= bit << (m - 1 - e);
    }
    return k;
}

// Validity evaluation over packed configs. One instance per thread: the
// adjacency scratch is reused across calls.
class ValidityKernel {
public:
    ValidityKernel(const Multigraph& g, const ConstraintSystem& c)
        : n_(g.vertex_count()), m_(g.edge_count()), adj_(static_cast<std::size_t>(n_)) {
        if (n_ > 64) throw size_guard_error("packed counting supports at most 64 vertices");
        tails_.reserve(static_cast<std::size_t>(m_));
        heads_.reserve(static_cast<std::size_t>(m_));
        for (const Edge& e : g.edges()) {
            tails_.push_back(e.tail);
            heads_.push_back(e.head);
        }
        for (const VertexPair& p : c.a()) pairs_.push_back({p.u, p.v, false});
        for (const VertexPair& p : c.b()) pairs_.push_back({p.u, p.v, true});
    }

    bool valid(PackedConfig packed) {
        if (pairs_.empty()) return true;
        for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = 0;
        for (int e = 0; e < m_; ++e) {
            const EdgeConfig c = packed_get(packed, e);
            if (c == EdgeConfig::Forward || c == EdgeConfig::TwoWay) {
                adj_[static_cast<std::size_t>(tails_[static_cast<std::size_t>(e)])] |=
                    VertexMask{1} << heads_[static_cast<std::size_t>(e)];
            }
            if (c == EdgeConfig::Backward || c == EdgeConfig::TwoWay) {
                adj_[static_cast<std::size_t>(heads_[static_cast<std::size_t>(e)])] |=
                    VertexMask{1} << tails_[static_cast<std::size_t>(e)];
            }
        }
        for (const Pair& p : pairs_) {
            adj_[static_cast<std::size_t>(p.u)] |= VertexMask{1} << p.v;
        }
        for (const Pair& p : pairs_) {
            if (mask_reaches(p.v, p.u) != p.require_reach) return false;
        }
        return true;
    }

private:
    struct Pair {
        int u;
        int v;
        bool require_reach;  // B pairs need v -> u, A pairs forbid it
    };

    bool mask_reaches(int from, int to) const {
        VertexMask seen = VertexMask{1} << from;
        VertexMask frontier = seen;
        const VertexMask goal = VertexMask{1} << to;
        if (seen & goal) return true;
        while (frontier) {
            VertexMask next = 0;
            VertexMask rest = frontier;
            while (rest) {
                const int w = std::countr_zero(rest);
                rest &= rest - 1;
                next |= adj_[static_cast<std::size_t>(w)];
            }
            if (next & goal) return true;
            frontier = next & ~seen;
            seen |= next;
        }
        return false;
    }

    int n_;
    int m_;
    std::vector<VertexMask> adj_;
    std::vector<int> tails_;
    std::vector<int> heads_;
    std::vector<Pair> pairs_;
};

}  // namespace fourient::detail
