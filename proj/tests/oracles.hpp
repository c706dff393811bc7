#ifndef SPLITCENSUS_TEST_ORACLES_HPP
#define SPLITCENSUS_TEST_ORACLES_HPP

// Independent reference implementations used only by the test suites. These
// deliberately use the dumbest correct algorithm available.

#include <algorithm>
#include <bit>
#include <vector>

#include "splitcensus/domgraph.hpp"
#include "splitcensus/lacunary.hpp"

namespace splitcensus::testing {

// Subtraction-based gcd.
inline u64 naive_gcd(u64 a, u64 b) {
    while (a != 0 && b != 0) {
        if (a >= b) {
            a -= b;
        } else {
            b -= a;
        }
    }
    return a + b;
}

// Divisor count by trial division.
inline u64 tau_trial_division(u64 n) {
    u64 count = 0;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += (d * d == n) ? 1 : 2;
    }
    return count;
}

// Quadratic schoolbook product on raw coefficient vectors.
inline std::vector<u64> naive_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + static_cast<u128>(a[i]) * b[j]) % p;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Domination number by scanning every vertex subset.
inline unsigned brute_gamma(const PatternGraph& g) {
    const int n = g.n();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    unsigned best = static_cast<unsigned>(n);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t covered = 0;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) covered |= g.closed_neighborhood(v);
        }
        if (covered == full) {
            best = std::min(best, static_cast<unsigned>(std::popcount(mask)));
        }
    }
    return best;
}

// Splitting oracle: multiplicities over F_p^* sum to the degree and 0 is not
// a root.
inline bool splits_by_multiplicity_sum(const DensePoly& f) {
    if (f.coeff(0) == 0) return false;
    u64 total = 0;
    for (u64 x = 1; x < f.ctx().p; ++x) total += root_multiplicity(f, x);
    return total == static_cast<u64>(f.degree());
}

// Labeled graphs on n vertices with no isolated vertex, by inclusion-exclusion.
inline u64 graphs_without_isolated_vertices(int n) {
    const auto choose = [](u64 a, u64 b) { return binomial_saturating(a, b); };
    long long total = 0;
    for (int i = 0; i <= n; ++i) {
        const int m = n - i;
        const u64 graphs = u64{1} << (m * (m - 1) / 2);
        const long long term = static_cast<long long>(choose(n, i) * graphs);
        total += (i % 2 == 0) ? term : -term;
    }
    return static_cast<u64>(total);
}

}  // namespace splitcensus::testing

#endif
