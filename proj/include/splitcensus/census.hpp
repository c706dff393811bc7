#ifndef SPLITCENSUS_CENSUS_HPP
#define SPLITCENSUS_CENSUS_HPP

// The exhaustive counting engine: which exponent patterns with t_k = t admit
// a fully split polynomial, the exact pattern count, an independent
// root-multiset oracle for it, the closed-form bound terms, and the
// per-labeled-graph classification report.

#include <optional>
#include <string>

#include "splitcensus/domgraph.hpp"
#include "splitcensus/zerostats.hpp"

namespace splitcensus {

struct CensusOptions {
    u64 budget = 100'000'000;  // max enumeration steps; hard error, never truncation
    bool strict_pattern = true;  // all coefficients nonzero (exact-pattern convention)
    unsigned jobs = 1;
};

// Hard cap on the normalized coefficient space (p-1)^k per pattern.
inline constexpr u64 kCoefficientSpaceCap = 100'000'000;

struct SplitWitness {
    bool splittable = false;
    std::vector<u64> coeffs;  // a_0..a_k, lexicographically first witness; a_0 = 1
};

/// Searches coefficient vectors with a_0 = 1 for one whose polynomial fully
/// splits. Scaling x -> cx maps a_i to a_i c^{t_i} and preserves both the
/// pattern and the split property, so only vectors that are lexicographically
/// minimal in their scaling orbit are tested; the first witness found is the
/// lexicographically smallest witness overall. In strict mode every a_i is
/// nonzero; otherwise interior coefficients may vanish (a_0, a_k never do).
SplitWitness pattern_splittable(const ExponentPattern& pattern, const CensusOptions& opts = {});

struct PatternResult {
    std::vector<u64> exps;
    bool splittable = false;
    u64 d = 0;                 // gcd parameter
    std::vector<u64> witness;  // empty when not splittable
    u64 witness_roots = 0;     // distinct roots of the witness in F_p^*
};

struct CensusRecord {
    u64 p = 0;
    unsigned k = 0;
    u64 t = 0;
    u64 n_split = 0;  // number of splittable patterns with t_k = t
    std::vector<PatternResult> per_pattern;  // lexicographic pattern order
    u64 trivial_bound = 0;      // C(t-1, k-1)
    double bound_leading = 0.0; // t^(k - k*ceil((k-3)/2) - 1) * p^((k-1)*ceil((k-3)/2))
    bool nontrivial = false;    // k > 3 and t > p^(1-1/k)
    bool strict_pattern = true;
};

/// Exact census over every pattern with t_k = t. Deterministic for any jobs
/// count: the pattern space is split into t_1-prefix blocks, each block is
/// processed independently, and block results are merged in t_1 order.
CensusRecord count_split_patterns(const FieldContext& ctx, unsigned k, u64 t,
                                  const CensusOptions& opts = {});

/// Independent oracle: enumerates all multisets of t roots from F_p^*,
/// expands prod (X - r_i), and counts the distinct exponent patterns whose
/// support is hit with exactly k+1 nonzero coefficients. Must agree with
/// count_split_patterns under the strict convention.
u64 count_split_patterns_rootside(const FieldContext& ctx, unsigned k, u64 t,
                                  u64 budget = 100'000'000);

struct PatternCountBound {
    double leading = 0.0;        // bound value without the subpolynomial factor
    u64 trivial_bound = 0;       // C(t-1, k-1)
    bool nontrivial = false;     // k > 3 and t > p^(1-1/k)
    int simplified_exponent = 0; // ceil(k/2) + 1, the exponent in the large-t regime
};

PatternCountBound pattern_count_bound(u64 p, unsigned k, u64 t);

enum class EndpointCase {
    both,     // vertices 0 and k both in the dominating set
    one,      // exactly one of them
    neither,  // neither
};

struct GraphClassEntry {
    u64 key = 0;    // canonical labeled-graph encoding
    u64 count = 0;  // patterns with t_k = t mapping to this graph
    int min_deg = 0;
    bool excluded = false;  // min degree 0: outside the domination analysis
    unsigned gamma = 0;
    std::vector<int> dominating;  // padded to floor((k+1)/2) members
    EndpointCase endpoint_case = EndpointCase::neither;
    double bound_value = 0.0;  // case bound at this (k, t, D)
};

struct GraphClassReport {
    u64 p = 0;
    unsigned k = 0;
    u64 t = 0;
    u64 d = 0;
    // Case bounds at (k, t, D): t^floor((k-3)/2) (t/D)^ceil((k+1)/2) when both
    // endpoints dominate, t^floor((k-1)/2) (t/D)^ceil((k-1)/2) for exactly one,
    // t^floor((k+1)/2) (t/D)^ceil((k-3)/2) for neither (the dominant one).
    double bound_both = 0.0;
    double bound_one = 0.0;
    double bound_neither = 0.0;
    std::vector<GraphClassEntry> entries;  // ascending canonical key
    u64 total_patterns = 0;  // sum of counts == C(t-1, k-1)
};

/// Joins the labeled-graph classification with domination data and the
/// per-case bound values. Verifies exactly that the neither-endpoint bound
/// dominates the other two whenever t >= D (their ratios are D^2 and D).
GraphClassReport graph_class_report(const FieldContext& ctx, unsigned k, u64 t, u64 threshold,
                                    u64 budget = 100'000'000);

const char* endpoint_case_name(EndpointCase c);

}  // namespace splitcensus

#endif
