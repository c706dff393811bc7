#include "splitcensus/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "splitcensus/parallel.hpp"

namespace splitcensus {

namespace {

std::vector<std::vector<u64>> all_patterns(u64 p, unsigned k) {
    std::vector<std::vector<u64>> out;
    for (u64 t = k; t < p; ++t) {
        for_each_pattern(k, t, [&](const std::vector<u64>& exps) { out.push_back(exps); });
    }
    return out;
}

// Walks every coefficient vector (a_1..a_k) with entries in [1, p-1],
// a_0 fixed to 1 (scaling normalization).
template <typename Fn>
void for_each_coeff_vector(u64 p, unsigned k, Fn&& fn) {
    std::vector<u64> tail(k, 1);
    std::vector<u64> coeffs(k + 1, 1);
    while (true) {
        for (unsigned i = 0; i < k; ++i) coeffs[i + 1] = tail[i];
        fn(coeffs);
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            if (++tail[i] < p) break;
            tail[i] = 1;
            --i;
        }
        if (i < 0) break;
    }
}

// Split oracle: over F_p^* the multiplicities must sum to the degree, and
// x = 0 must not be a root (the constant term is nonzero).
bool split_oracle(const LacunaryPoly& f) {
    const DensePoly dense = f.to_dense();
    if (dense.coeff(0) == 0) {
        throw InvariantViolationError("split oracle: constant term vanished");
    }
    return count_roots_dense(dense).total_with_multiplicity == f.pattern().top();
}

u64 next_prime_after(u64 n) {
    u64 c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

}  // namespace

SweepResult verify_multiplicity_bound(const FieldContext& ctx, unsigned k_max, unsigned jobs) {
    SweepResult total;
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto patterns = all_patterns(ctx.p, k);
        std::vector<SweepResult> partial(patterns.size());
        parallel_blocks(patterns.size(), jobs, [&](std::size_t b) {
            const ExponentPattern pattern(ctx, patterns[b]);
            SweepResult& r = partial[b];
            for_each_coeff_vector(ctx.p, k, [&](const std::vector<u64>& coeffs) {
                const LacunaryPoly f(pattern, coeffs);
                ++r.checked;
                try {
                    count_roots_brute(f);
                } catch (const InvariantViolationError&) {
                    ++r.violations;
                }
            });
        });
        for (const SweepResult& r : partial) {
            total.checked += r.checked;
            total.violations += r.violations;
        }
    }
    return total;
}

SweepResult verify_determinant_identity(unsigned k_max, u64 t_max) {
    const FieldContext ctx = make_context(next_prime_after(t_max));
    SweepResult total;
    for (unsigned k = 1; k <= k_max; ++k) {
        for (u64 t = k; t <= t_max; ++t) {
            for_each_pattern(k, t, [&](const std::vector<u64>& exps) {
                const ExponentPattern pattern(ctx, exps);
                const DeterminantIdentity id = determinant_identity_check(pattern);
                ++total.checked;
                if (!id.equal || id.det == 0) ++total.violations;
            });
        }
    }
    return total;
}

SweepResult verify_ore_bound(int n_min, int n_max, unsigned jobs) {
    SweepResult total;
    for (int n = n_min; n <= n_max; ++n) {
        const int bits = n * (n - 1) / 2;
        const u64 n_keys = u64{1} << bits;
        const u64 chunk = std::min<u64>(n_keys, 1u << 15);
        const std::size_t n_blocks = static_cast<std::size_t>((n_keys + chunk - 1) / chunk);
        std::vector<SweepResult> partial(n_blocks);
        parallel_blocks(n_blocks, jobs, [&](std::size_t b) {
            SweepResult& r = partial[b];
            const u64 lo = b * chunk;
            const u64 hi = std::min(n_keys, lo + chunk);
            for (u64 key = lo; key < hi; ++key) {
                const PatternGraph g = PatternGraph::from_canonical_key(n, key);
                if (min_degree(g) < 1) continue;
                ++r.checked;
                if (!ore_check(g)) ++r.violations;
            }
        });
        for (const SweepResult& r : partial) {
            total.checked += r.checked;
            total.violations += r.violations;
        }
    }
    return total;
}

SweepResult verify_min_degree_at_gcd_parameter(const FieldContext& ctx, unsigned k_max) {
    SweepResult total;
    for (unsigned k = 1; k <= k_max; ++k) {
        for (const auto& exps : all_patterns(ctx.p, k)) {
            const ExponentPattern pattern(ctx, exps);
            const PatternGraph g = build_pattern_graph(pattern, gcd_parameter(pattern));
            ++total.checked;
            if (min_degree(g) < 1) ++total.violations;
        }
    }
    return total;
}

SweepResult verify_split_test_exhaustive(const FieldContext& ctx, unsigned k_max, unsigned jobs) {
    SweepResult total;
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto patterns = all_patterns(ctx.p, k);
        std::vector<SweepResult> partial(patterns.size());
        parallel_blocks(patterns.size(), jobs, [&](std::size_t b) {
            const ExponentPattern pattern(ctx, patterns[b]);
            SweepResult& r = partial[b];
            for_each_coeff_vector(ctx.p, k, [&](const std::vector<u64>& coeffs) {
                const LacunaryPoly f(pattern, coeffs);
                ++r.checked;
                if (fully_splits(f) != split_oracle(f)) ++r.violations;
            });
        });
        for (const SweepResult& r : partial) {
            total.checked += r.checked;
            total.violations += r.violations;
        }
    }
    return total;
}

SweepResult verify_split_test_random(const std::vector<u64>& primes, unsigned k_max, u64 count,
                                     u64 seed) {
    std::map<u64, FieldContext> contexts;
    for (u64 p : primes) contexts.emplace(p, make_context(p));

    std::mt19937_64 rng(seed);
    SweepResult total;
    for (u64 i = 0; i < count; ++i) {
        const u64 p = primes[rng() % primes.size()];
        const FieldContext& ctx = contexts.at(p);
        const unsigned k = 1 + static_cast<unsigned>(
            rng() % std::min<u64>(k_max, p - 1));

        // k distinct exponents in [1, p-1], ascending.
        std::vector<u64> exps;
        while (exps.size() < k) {
            const u64 e = 1 + rng() % (p - 1);
            if (std::find(exps.begin(), exps.end(), e) == exps.end()) exps.push_back(e);
        }
        std::sort(exps.begin(), exps.end());

        std::vector<u64> coeffs(k + 1);
        for (u64& c : coeffs) c = 1 + rng() % (p - 1);

        const LacunaryPoly f(ExponentPattern(ctx, exps), coeffs);
        ++total.checked;
        if (fully_splits(f) != split_oracle(f)) ++total.violations;
    }
    return total;
}

}  // namespace splitcensus
