#include "fourient/series.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "internal.hpp"

namespace fourient {

namespace {

BigInt binomial(int n, int k) {
    BigInt result = 1;
    for (int i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace

ExactSeries::ExactSeries(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) coefficients_.resize(1);
}

ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
    const int order = std::min(a.order(), b.order());
    ExactSeries out(order);
    for (int n = 0; n <= order; ++n) out.set_coefficient(n, a.coefficient(n) + b.coefficient(n));
    return out;
}

ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
    const int order = std::min(a.order(), b.order());
    ExactSeries out(order);
    for (int n = 0; n <= order; ++n) out.set_coefficient(n, a.coefficient(n) - b.coefficient(n));
    return out;
}

// EGF product: (fg)_n = sum_k C(n,k) f_k g_{n-k}.
ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
    const int order = std::min(a.order(), b.order());
    ExactSeries out(order);
    for (int n = 0; n <= order; ++n) {
        BigRational sum = 0;
        for (int k = 0; k <= n; ++k) {
            sum += BigRational(binomial(n, k)) * a.coefficient(k) * b.coefficient(n - k);
        }
        out.set_coefficient(n, std::move(sum));
    }
    return out;
}

ExactSeries series_reciprocal(const ExactSeries& a) {
    if (a.coefficient(0) == 0) {
        throw std::invalid_argument("series reciprocal requires a nonzero constant term");
    }
    const int order = a.order();
    ExactSeries out(order);
    const BigRational inv0 = BigRational(1) / a.coefficient(0);
    out.set_coefficient(0, inv0);
    for (int n = 1; n <= order; ++n) {
        BigRational sum = 0;
        for (int k = 1; k <= n; ++k) {
            sum += BigRational(binomial(n, k)) * a.coefficient(k) * out.coefficient(n - k);
        }
        out.set_coefficient(n, -inv0 * sum);
    }
    return out;
}

// g = exp(a) satisfies g' = a' g, i.e. g_{n+1} = sum_k C(n,k) a_{k+1} g_{n-k}.
ExactSeries series_exp(const ExactSeries& a) {
    if (a.coefficient(0) != 0) {
        throw std::invalid_argument("series exp requires a zero constant term");
    }
    const int order = a.order();
    ExactSeries out(order);
    out.set_coefficient(0, 1);
    for (int n = 0; n < order; ++n) {
        BigRational sum = 0;
        for (int k = 0; k <= n; ++k) {
            sum += BigRational(binomial(n, k)) * a.coefficient(k + 1) * out.coefficient(n - k);
        }
        out.set_coefficient(n + 1, std::move(sum));
    }
    return out;
}

ArcWeights ArcWeights::constant(const Multigraph& g, long y_value, long z_value) {
    ArcWeights w;
    w.y.assign(static_cast<std::size_t>(2 * g.edge_count()), BigInt(y_value));
    w.z.assign(static_cast<std::size_t>(2 * g.edge_count()), BigInt(z_value));
    return w;
}

namespace {

// Reachability masks (reflexive) for adjacency given as per-vertex bitmasks.
void reach_masks(const std::vector<VertexMask>& adj, std::vector<VertexMask>& reach) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        VertexMask seen = VertexMask{1} << v;
        VertexMask frontier = seen;
        while (frontier) {
            VertexMask next = 0;
            VertexMask rest = frontier;
            while (rest) {
                const int w = std::countr_zero(rest);
                rest &= rest - 1;
                next |= adj[static_cast<std::size_t>(w)];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        reach[static_cast<std::size_t>(v)] = seen;
    }
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> acy_cyc(const Fourientation& phi) {
    const Multigraph& g = phi.graph();
    const int n = g.vertex_count();
    if (n > 64) throw size_guard_error("arc classification supports at most 64 vertices");
    std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const EdgeConfig c = phi.config(e);
        if (c == EdgeConfig::Forward || c == EdgeConfig::TwoWay) {
            adj[static_cast<std::size_t>(edge.tail)] |= VertexMask{1} << edge.head;
        }
        if (c == EdgeConfig::Backward || c == EdgeConfig::TwoWay) {
            adj[static_cast<std::size_t>(edge.head)] |= VertexMask{1} << edge.tail;
        }
    }
    std::vector<VertexMask> reach(static_cast<std::size_t>(n));
    reach_masks(adj, reach);

    std::pair<std::vector<int>, std::vector<int>> result;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const EdgeConfig c = phi.config(e);
        if (!is_one_way(c)) continue;
        const int tail = c == EdgeConfig::Forward ? edge.tail : edge.head;
        const int head = c == EdgeConfig::Forward ? edge.head : edge.tail;
        const int arc_id = 2 * e + (c == EdgeConfig::Backward ? 1 : 0);
        const bool cyclic = (reach[static_cast<std::size_t>(head)] >> tail) & 1;
        (cyclic ? result.second : result.first).push_back(arc_id);
    }
    return result;
}

IdentityValue eval_identity(const Multigraph& g, const ArcWeights& w, int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges) {
        throw size_guard_error("identity evaluation is limited to " + std::to_string(max_edges) +
                               " edges (got " + std::to_string(m) + ")");
    }
    if (static_cast<int>(w.y.size()) != 2 * m || static_cast<int>(w.z.size()) != 2 * m) {
        throw std::invalid_argument("weights must cover both arcs of every edge");
    }

    IdentityValue value;
    value.orientation_side = 0;
    value.fourientation_side = 0;

    // Orientation side: every edge 1-way, weight (1+y) per acyclic arc and
    // (1+z) per cyclic arc.
    const std::uint64_t orientation_total = std::uint64_t{1} << m;
    for (std::uint64_t k = 0; k < orientation_total; ++k) {
        const detail::PackedConfig packed = detail::packed_config_at(0, m, k);
        const Fourientation phi = detail::unpack(g, packed);
        const auto [acyclic, cyclic] = acy_cyc(phi);
        BigInt term = 1;
        for (int arc : acyclic) term *= 1 + w.y[static_cast<std::size_t>(arc)];
        for (int arc : cyclic) term *= 1 + w.z[static_cast<std::size_t>(arc)];
        value.orientation_side += term;
    }

    // Fourientation side: weight y per acyclic 1-way arc, z per cyclic one.
    const std::uint64_t fourientation_total = std::uint64_t{1} << (2 * m);
    for (std::uint64_t packed = 0; packed < fourientation_total; ++packed) {
        const Fourientation phi = detail::unpack(g, packed);
        const auto [acyclic, cyclic] = acy_cyc(phi);
        BigInt term = 1;
        for (int arc : acyclic) {
            term *= w.y[static_cast<std::size_t>(arc)];
            if (term == 0) break;
        }
        if (term != 0) {
            for (int arc : cyclic) {
                term *= w.z[static_cast<std::size_t>(arc)];
                if (term == 0) break;
            }
        }
        value.fourientation_side += term;
    }
    return value;
}

namespace {

// Both-ways reachability from vertex 0 over <= 8 vertices.
bool strongly_connected(int n, const std::array<VertexMask, 8>& adj,
                        const std::array<VertexMask, 8>& radj) {
    const VertexMask full = (VertexMask{1} << n) - 1;
    for (const auto* table : {&adj, &radj}) {
        VertexMask seen = 1;
        VertexMask frontier = 1;
        while (frontier) {
            VertexMask next = 0;
            VertexMask rest = frontier;
            while (rest) {
                const int w = std::countr_zero(rest);
                rest &= rest - 1;
                next |= (*table)[static_cast<std::size_t>(w)];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != full) return false;
    }
    return true;
}

}  // namespace

std::uint64_t count_scc_tournaments(int n) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (n > 6) throw size_guard_error("tournament counting is limited to 6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t k = 0; k < total; ++k) {
        std::array<VertexMask, 8> adj{};
        std::array<VertexMask, 8> radj{};
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            const auto [i, j] = pairs[b];
            const int tail = ((k >> b) & 1) ? j : i;
            const int head = ((k >> b) & 1) ? i : j;
            adj[static_cast<std::size_t>(tail)] |= VertexMask{1} << head;
            radj[static_cast<std::size_t>(head)] |= VertexMask{1} << tail;
        }
        if (strongly_connected(n, adj, radj)) ++count;
    }
    return count;
}

std::uint64_t count_scc_digraphs(int n) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (n > 5) throw size_guard_error("digraph counting is limited to 5 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) pairs.emplace_back(i, j);
        }
    }
    std::uint64_t count = 0;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t k = 0; k < total; ++k) {
        std::array<VertexMask, 8> adj{};
        std::array<VertexMask, 8> radj{};
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!((k >> b) & 1)) continue;
            const auto [i, j] = pairs[b];
            adj[static_cast<std::size_t>(i)] |= VertexMask{1} << j;
            radj[static_cast<std::size_t>(j)] |= VertexMask{1} << i;
        }
        if (strongly_connected(n, adj, radj)) ++count;
    }
    return count;
}

namespace {

// Sum of 2^(cyclic arc count) over all tournaments on n labeled vertices.
BigInt tournament_weighted_sum(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    BigInt sum = 0;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            const auto [i, j] = pairs[b];
            const int tail = ((k >> b) & 1) ? j : i;
            const int head = ((k >> b) & 1) ? i : j;
            adj[static_cast<std::size_t>(tail)] |= VertexMask{1} << head;
        }
        std::vector<VertexMask> reach(static_cast<std::size_t>(n));
        reach_masks(adj, reach);
        int cyclic = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            const auto [i, j] = pairs[b];
            const int tail = ((k >> b) & 1) ? j : i;
            const int head = ((k >> b) & 1) ? i : j;
            if ((reach[static_cast<std::size_t>(head)] >> tail) & 1) ++cyclic;
        }
        sum += BigInt(1) << cyclic;
    }
    return sum;
}

}  // namespace

IraReport verify_ira(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    if (max_n > 5) throw size_guard_error("the EGF verification is limited to max_n <= 5");

    IraReport report;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        report.tournament_counts.push_back(count_scc_tournaments(n));
        report.digraph_counts.push_back(count_scc_digraphs(n));
        report.tournament_weighted_sums.push_back(tournament_weighted_sum(n));
    }

    ExactSeries denominator(max_n);
    denominator.set_coefficient(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        const BigInt scale = BigInt(1) << (n * (n - 1) / 2);
        denominator.set_coefficient(
            n, BigRational(-scale * report.tournament_counts[static_cast<std::size_t>(n - 1)]));
    }
    report.lhs = series_reciprocal(denominator);

    ExactSeries exponent(max_n);
    for (int n = 1; n <= max_n; ++n) {
        exponent.set_coefficient(
            n, BigRational(report.digraph_counts[static_cast<std::size_t>(n - 1)]));
    }
    report.rhs = series_exp(exponent);

    bool ok = report.lhs == report.rhs;
    for (int n = 1; n <= max_n && ok; ++n) {
        ok = report.lhs.coefficient(n) ==
             BigRational(report.tournament_weighted_sums[static_cast<std::size_t>(n - 1)]);
    }
    report.verdict = ok;
    return report;
}

}  // namespace fourient
