#include "splitcensus/domgraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace splitcensus {

PatternGraph::PatternGraph(int n, std::vector<std::uint32_t> rows,
                           std::optional<GraphLabel> label)
    : n_(n), rows_(std::move(rows)), label_(std::move(label)) {
    if (n_ < 2) throw Error("pattern graph: need at least 2 vertices");
    if (n_ > 32) throw TooLargeError("pattern graph: bitset rows hold at most 32 vertices");
    if (static_cast<int>(rows_.size()) != n_) throw Error("pattern graph: row count mismatch");
    const std::uint32_t vertex_mask = (n_ == 32) ? ~std::uint32_t{0}
                                                 : ((std::uint32_t{1} << n_) - 1);
    for (int i = 0; i < n_; ++i) {
        if ((rows_[i] & ~vertex_mask) != 0) throw Error("pattern graph: edge out of range");
        if ((rows_[i] >> i) & 1u) throw Error("pattern graph: self-loop");
        for (int j = 0; j < n_; ++j) {
            if (((rows_[i] >> j) & 1u) != ((rows_[j] >> i) & 1u)) {
                throw Error("pattern graph: adjacency not symmetric");
            }
        }
    }
}

PatternGraph PatternGraph::from_canonical_key(int n, u64 key) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((key >> bit) & 1u) {
                rows[i] |= std::uint32_t{1} << j;
                rows[j] |= std::uint32_t{1} << i;
            }
        }
    }
    return PatternGraph(n, std::move(rows));
}

int PatternGraph::degree(int i) const {
    return std::popcount(rows_[i]);
}

u64 PatternGraph::canonical_key() const {
    if (n_ * (n_ - 1) / 2 > 64) {
        throw TooLargeError("canonical_key: upper triangle does not fit 64 bits");
    }
    u64 key = 0;
    int bit = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j, ++bit) {
            if (edge(i, j)) key |= u64{1} << bit;
        }
    }
    return key;
}

PatternGraph build_pattern_graph(const ExponentPattern& pattern, u64 threshold) {
    if (threshold < 1) throw Error("build_pattern_graph: threshold must be >= 1");
    const std::vector<u64> ext = pattern.extended();
    const u64 pm1 = pattern.ctx().p - 1;
    const int n = static_cast<int>(ext.size());
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const u64 diff = ext[j] - ext[i];
            if (gcd(diff, pm1) >= threshold) {
                rows[i] |= std::uint32_t{1} << j;
                rows[j] |= std::uint32_t{1} << i;
            }
        }
    }
    GraphLabel label{pattern.exps(), pattern.ctx().p, threshold};
    return PatternGraph(n, std::move(rows), std::move(label));
}

int min_degree(const PatternGraph& g) {
    int best = g.n();
    for (int i = 0; i < g.n(); ++i) best = std::min(best, g.degree(i));
    return best;
}

namespace {

bool covers(const PatternGraph& g, const int* members, int count) {
    const std::uint32_t full = (g.n() == 32) ? ~std::uint32_t{0}
                                             : ((std::uint32_t{1} << g.n()) - 1);
    std::uint32_t covered = 0;
    for (int i = 0; i < count; ++i) covered |= g.closed_neighborhood(members[i]);
    return covered == full;
}

}  // namespace

DominatingSet min_dominating_set(const PatternGraph& g) {
    const int n = g.n();
    if (n > kMaxDominationVertices) {
        throw TooLargeError("min_dominating_set: exact search capped at " +
                            std::to_string(kMaxDominationVertices) + " vertices");
    }
    int idx[kMaxDominationVertices];
    for (int size = 1; size <= n; ++size) {
        // Lexicographic combinations; the first cover found at this size is
        // the lexicographically smallest minimum dominating set.
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (covers(g, idx, size)) {
                DominatingSet result;
                result.members.assign(idx, idx + size);
                result.is_minimum = true;
                return result;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw Error("min_dominating_set: unreachable (whole vertex set dominates)");
}

bool ore_check(const PatternGraph& g) {
    if (min_degree(g) == 0) {
        throw IsolatedVertexError("ore_check: graph has an isolated vertex");
    }
    const DominatingSet s = min_dominating_set(g);
    return 2 * s.members.size() <= static_cast<std::size_t>(g.n());
}

DominatingSet padded_dominating_set(const PatternGraph& g) {
    if (min_degree(g) == 0) {
        throw IsolatedVertexError("padded_dominating_set: graph has an isolated vertex");
    }
    DominatingSet s = min_dominating_set(g);
    const std::size_t target = static_cast<std::size_t>(g.n()) / 2;
    if (s.members.size() > target) {
        // gamma <= floor(n/2) whenever delta >= 1.
        throw InvariantViolationError("padded_dominating_set: minimum set larger than n/2");
    }
    s.is_minimum = (s.members.size() == target);
    for (int v = 0; s.members.size() < target; ++v) {
        if (!std::binary_search(s.members.begin(), s.members.end(), v)) {
            s.members.insert(std::upper_bound(s.members.begin(), s.members.end(), v), v);
        }
    }
    s.padded_to = static_cast<int>(target);
    return s;
}

std::map<u64, u64> classify_patterns(const FieldContext& ctx, unsigned k, u64 t, u64 threshold,
                                     u64 budget) {
    if (k + 1 > 11) {
        throw TooLargeError("classify_patterns: canonical key needs k + 1 <= 11 vertices");
    }
    if (t >= ctx.p) throw Error("classify_patterns: t must be below p");
    const u64 n_patterns = binomial_saturating(t - 1, k - 1);
    if (n_patterns > budget) {
        throw BudgetExceededError("classify_patterns: " + std::to_string(n_patterns) +
                                  " patterns exceed the budget");
    }
    std::map<u64, u64> classes;
    for_each_pattern(k, t, [&](const std::vector<u64>& exps) {
        const ExponentPattern pattern(ctx, exps);
        const PatternGraph g = build_pattern_graph(pattern, threshold);
        ++classes[g.canonical_key()];
    });
    return classes;
}

}  // namespace splitcensus
