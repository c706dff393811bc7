#ifndef SPLITCENSUS_DOMGRAPH_HPP
#define SPLITCENSUS_DOMGRAPH_HPP

// Labeled graphs on vertices {0,...,k}: the gcd-threshold construction from
// an exponent pattern, minimum degree, exact minimum dominating sets, the
// gamma(G) <= n/2 check, and the dominating set padded to floor((k+1)/2).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "splitcensus/lacunary.hpp"

namespace splitcensus {

// Exact-search guard for dominating sets.
inline constexpr int kMaxDominationVertices = 24;

struct GraphLabel {
    std::vector<u64> exps;  // originating pattern (t_1..t_k)
    u64 p = 0;
    u64 d = 0;  // gcd threshold used to build the graph
};

/// Simple undirected labeled graph, adjacency as bitset rows.
class PatternGraph {
  public:
    PatternGraph(int n, std::vector<std::uint32_t> rows,
                 std::optional<GraphLabel> label = std::nullopt);

    /// Decode a row-major upper-triangle edge bitstring (bit 0 = edge {0,1},
    /// bit 1 = {0,2}, ..., continuing row by row).
    static PatternGraph from_canonical_key(int n, u64 key);

    int n() const { return n_; }
    bool edge(int i, int j) const { return (rows_[i] >> j) & 1u; }
    std::uint32_t row(int i) const { return rows_[i]; }
    std::uint32_t closed_neighborhood(int i) const {
        return rows_[i] | (std::uint32_t{1} << i);
    }
    int degree(int i) const;
    const std::optional<GraphLabel>& label() const { return label_; }

    /// Row-major upper-triangle bitstring; labeled-graph identity.
    u64 canonical_key() const;

  private:
    int n_;
    std::vector<std::uint32_t> rows_;
    std::optional<GraphLabel> label_;
};

/// Vertices 0..k stand for the extended exponents (0, t_1, ..., t_k);
/// {i, j} is an edge iff gcd(|t_i - t_j|, p-1) >= threshold.
PatternGraph build_pattern_graph(const ExponentPattern& pattern, u64 threshold);

int min_degree(const PatternGraph& g);

struct DominatingSet {
    std::vector<int> members;  // ascending
    bool is_minimum = false;
    std::optional<int> padded_to;
};

/// Exact minimum dominating set by ascending-cardinality subset search;
/// ties broken by the lexicographically smallest vertex set. Throws
/// TooLargeError above kMaxDominationVertices.
DominatingSet min_dominating_set(const PatternGraph& g);

/// gamma(G) <= floor(n/2); holds for every graph without isolated vertices,
/// so false is a failed check, not a valid state. Throws IsolatedVertexError
/// when delta(G) = 0.
bool ore_check(const PatternGraph& g);

/// A dominating set of cardinality exactly floor(n/2), obtained from a
/// minimum one by adding smallest-index absent vertices. Requires delta >= 1.
DominatingSet padded_dominating_set(const PatternGraph& g);

/// Groups every pattern with t_k = t by its labeled gcd-threshold graph.
/// Returns canonical key -> number of patterns; counts over all keys sum to
/// C(t-1, k-1). Throws BudgetExceededError when the pattern space exceeds
/// the budget, TooLargeError when the key would not fit 64 bits.
std::map<u64, u64> classify_patterns(const FieldContext& ctx, unsigned k, u64 t, u64 threshold,
                                     u64 budget = 100'000'000);

}  // namespace splitcensus

#endif
