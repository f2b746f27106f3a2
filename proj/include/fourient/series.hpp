#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fourient/fourientation.hpp"
#include "fourient/graph.hpp"

namespace fourient {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Truncated exponential generating function: the stored coefficient c_n is
// the weight of x^n / n!. All arithmetic is exact; combining two series
// truncates to the smaller order.
class ExactSeries {
public:
    ExactSeries() : coefficients_(1) {}
    explicit ExactSeries(int order) : coefficients_(static_cast<std::size_t>(order) + 1) {}
    explicit ExactSeries(std::vector<BigRational> coefficients);

    int order() const { return static_cast<int>(coefficients_.size()) - 1; }
    const BigRational& coefficient(int n) const { return coefficients_[static_cast<std::size_t>(n)]; }
    void set_coefficient(int n, BigRational value) {
        coefficients_[static_cast<std::size_t>(n)] = std::move(value);
    }
    const std::vector<BigRational>& coefficients() const { return coefficients_; }

    friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b);
    friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b);
    friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
    friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

private:
    std::vector<BigRational> coefficients_;  // c_0 .. c_N
};

// Multiplicative inverse to the series' truncation order; requires c_0 != 0.
ExactSeries series_reciprocal(const ExactSeries& a);

// exp(a) to the truncation order; requires c_0 = 0.
ExactSeries series_exp(const ExactSeries& a);

// Integer weights on the arcs of the bidirected edge set; arc id 2e is the
// forward arc of edge e, arc id 2e+1 the backward one.
struct ArcWeights {
    std::vector<BigInt> y;
    std::vector<BigInt> z;

    static ArcWeights constant(const Multigraph& g, long y_value, long z_value);
};

// The 1-way arcs of realize(phi), split into acyclic and cyclic there (the
// constraint arcs play no role here). Arc ids as in ArcWeights, ascending.
std::pair<std::vector<int>, std::vector<int>> acy_cyc(const Fourientation& phi);

struct IdentityValue {
    BigInt orientation_side;    // sum over orientations of prod (1+y) (1+z)
    BigInt fourientation_side;  // sum over fourientations of prod y prod z
    bool equal() const { return orientation_side == fourientation_side; }
};

inline constexpr int kMaxEdgesIdentity = 10;

// Evaluates both sides of the orientation/fourientation weight identity.
IdentityValue eval_identity(const Multigraph& g, const ArcWeights& w,
                            int max_edges = kMaxEdgesIdentity);

// Strongly connected tournaments on n labeled vertices (2^(n choose 2)
// cases); n <= 6.
std::uint64_t count_scc_tournaments(int n);

// Strongly connected simple digraphs on n labeled vertices (2^(n(n-1))
// cases); n <= 5.
std::uint64_t count_scc_digraphs(int n);

struct IraReport {
    int max_n = 0;
    std::vector<std::uint64_t> tournament_counts;  // t_1 .. t_max
    std::vector<std::uint64_t> digraph_counts;     // s_1 .. s_max
    std::vector<BigInt> tournament_weighted_sums;  // sum of 2^|Cyc| over n-tournaments
    ExactSeries lhs;  // 1 / (1 - sum 2^(n choose 2) t_n x^n/n!)
    ExactSeries rhs;  // exp(sum s_n x^n/n!)
    bool verdict = false;
};

// Brute-forces t_n and s_n, builds both sides of the tournament/digraph EGF
// identity, and cross-checks each lhs coefficient against the direct
// weighted tournament sum. verdict is true iff everything agrees. max_n <= 5.
IraReport verify_ira(int max_n);

}  // namespace fourient
