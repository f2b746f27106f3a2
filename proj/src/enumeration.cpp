#include "fourient/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "internal.hpp"

namespace fourient {

FourientationRange::FourientationRange(const Multigraph& g, EdgeMask solid)
    : graph_(&g), solid_(solid & g.all_edges_mask()) {
    if (g.edge_count() > kMaxEdgesSingleCount) {
        throw size_guard_error("fourientation enumeration is limited to " +
                               std::to_string(kMaxEdgesSingleCount) + " edges");
    }
}

Fourientation FourientationRange::at(std::uint64_t k) const {
    return detail::unpack(*graph_,
                          detail::packed_config_at(solid_, graph_->edge_count(), k));
}

namespace {

std::uint64_t count_range(const Multigraph& g, const ConstraintSystem& c, EdgeMask solid,
                          std::uint64_t begin, std::uint64_t end) {
    detail::ValidityKernel kernel(g, c);
    const int m = g.edge_count();
    std::uint64_t count = 0;
    for (std::uint64_t k = begin; k < end; ++k) {
        if (kernel.valid(detail::packed_config_at(solid, m, k))) ++count;
    }
    return count;
}

}  // namespace

std::uint64_t count_valid(const Multigraph& g, const ConstraintSystem& c, EdgeMask solid,
                          int threads) {
    const int m = g.edge_count();
    if (m > kMaxEdgesSingleCount) {
        throw size_guard_error("count_valid is limited to " +
                               std::to_string(kMaxEdgesSingleCount) + " edges (got " +
                               std::to_string(m) + ")");
    }
    solid &= g.all_edges_mask();
    const std::uint64_t total = std::uint64_t{1} << m;
    if (threads <= 1 || total < 1024) {
        return count_range(g, c, solid, 0, total);
    }
    const int worker_count = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(worker_count), 0);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
        const std::uint64_t begin = total * static_cast<std::uint64_t>(w) /
                                    static_cast<std::uint64_t>(worker_count);
        const std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) /
                                  static_cast<std::uint64_t>(worker_count);
        workers.emplace_back([&, w, begin, end] {
            partial[static_cast<std::size_t>(w)] = count_range(g, c, solid, begin, end);
        });
    }
    for (std::thread& t : workers) t.join();
    std::uint64_t count = 0;
    for (std::uint64_t p : partial) count += p;
    return count;
}

CountReport verify_solid_set_independence(const Multigraph& g, const ConstraintSystem& c, int max_edges,
                                int threads) {
    const int m = g.edge_count();
    if (m > max_edges) {
        throw size_guard_error("verify over all solid sets is limited to " +
                               std::to_string(max_edges) + " edges (got " + std::to_string(m) +
                               ")");
    }
    CountReport report;
    const EdgeMask all = g.all_edges_mask();
    for (EdgeMask solid = 0;; ++solid) {
        report.counts.emplace_back(solid, count_valid(g, c, solid, threads));
        if (solid == all) break;
    }
    report.verdict = std::all_of(report.counts.begin(), report.counts.end(),
                                 [&](const auto& entry) {
                                     return entry.second == report.counts.front().second;
                                 });
    return report;
}

bool is_forest(const Multigraph& g, EdgeMask subset) {
    return edge_subset_is_forest(g, subset);
}

namespace {

std::vector<Edge> constraint_edges(const ConstraintSystem& c) {
    std::vector<Edge> extra;
    extra.reserve(c.a().size() + c.b().size());
    for (const VertexPair& p : c.a()) extra.push_back({p.u, p.v});
    for (const VertexPair& p : c.b()) extra.push_back({p.u, p.v});
    return extra;
}

}  // namespace

bool is_ab_connected(const Multigraph& g, EdgeMask subset, const ConstraintSystem& c) {
    const std::vector<Edge> extra = constraint_edges(c);
    std::vector<Edge> sub_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if ((subset >> e) & 1) sub_edges.push_back(g.edge(e));
    }
    const Multigraph sub(g.vertex_count(), std::move(sub_edges));
    return connected_components(sub, extra) == connected_components(g, extra);
}

std::uint64_t count_subgraph_family(const Multigraph& g, const ConstraintSystem& c,
                                    SubgraphFamily family, bool require_valid) {
    const int m = g.edge_count();
    if (m > kMaxEdgesSingleCount) {
        throw size_guard_error("subgraph family counting is limited to " +
                               std::to_string(kMaxEdgesSingleCount) + " edges");
    }
    detail::ValidityKernel kernel(g, c);
    std::uint64_t count = 0;
    const EdgeMask all = g.all_edges_mask();
    for (EdgeMask sub = 0;; ++sub) {
        bool in_family = true;
        if (family == SubgraphFamily::Forests || family == SubgraphFamily::AbConnectedForests) {
            in_family = is_forest(g, sub);
        }
        if (in_family &&
            (family == SubgraphFamily::AbConnected || family == SubgraphFamily::AbConnectedForests)) {
            in_family = is_ab_connected(g, sub, c);
        }
        if (in_family && require_valid) {
            // present edge -> TwoWay, absent -> ZeroWay
            detail::PackedConfig packed = 0;
            for (int e = 0; e < m; ++e) {
                const EdgeConfig cfg = ((sub >> e) & 1) ? EdgeConfig::TwoWay : EdgeConfig::ZeroWay;
                packed |= static_cast<detail::PackedConfig>(cfg) << (2 * e);
            }
            in_family = kernel.valid(packed);
        }
        if (in_family) ++count;
        if (sub == all) break;
    }
    return count;
}

}  // namespace fourient
