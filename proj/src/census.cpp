#include "splitcensus/census.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "splitcensus/parallel.hpp"

namespace splitcensus {

namespace {

long long ceil_half(long long x) {
    return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
}

long long floor_half(long long x) {
    return x >= 0 ? x / 2 : -(((-x) + 1) / 2);
}

// Scale vectors (c^{t_1}, ..., c^{t_k}) for c in F_p^*, deduplicated, identity
// dropped. Materialized only at desk scale; without the table the search
// simply scans every vector, which returns the same witness.
constexpr u64 kMaxScaleTableField = u64{1} << 20;

std::vector<std::vector<u64>> scale_vectors(const ExponentPattern& pattern) {
    const u64 p = pattern.ctx().p;
    std::vector<std::vector<u64>> scales;
    if (p - 1 > kMaxScaleTableField) return scales;
    const auto& exps = pattern.exps();
    scales.reserve(p - 1);
    for (u64 c = 1; c < p; ++c) {
        std::vector<u64> s(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) s[i] = mod_pow(c, exps[i], p);
        scales.push_back(std::move(s));
    }
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    std::erase_if(scales, [](const std::vector<u64>& s) {
        return std::all_of(s.begin(), s.end(), [](u64 v) { return v == 1; });
    });
    return scales;
}

// True iff a is lexicographically minimal within its scaling orbit.
bool orbit_canonical(const std::vector<u64>& a, const std::vector<std::vector<u64>>& scales,
                     u64 p) {
    for (const auto& s : scales) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u64 b = mod_mul(a[i], s[i], p);
            if (b < a[i]) return false;  // scaled vector is lex-smaller
            if (b > a[i]) break;
        }
    }
    return true;
}

std::vector<u64> dense_coeffs(const ExponentPattern& pattern, const std::vector<u64>& tail) {
    std::vector<u64> c(pattern.top() + 1, 0);
    c[0] = 1;
    const auto& exps = pattern.exps();
    for (std::size_t i = 0; i < exps.size(); ++i) c[exps[i]] = tail[i];
    return c;
}

u64 coefficient_space(u64 p, unsigned k, u64 cap) {
    u64 space = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (space > cap / (p - 1)) return ~u64{0};
        space *= p - 1;
    }
    return space;
}

void check_witness(const FieldContext& ctx, const std::vector<u64>& exps,
                   const std::vector<u64>& witness, bool strict) {
    DensePoly f(ctx, [&] {
        std::vector<u64> c(exps.back() + 1, 0);
        c[0] = witness[0];
        for (std::size_t i = 0; i < exps.size(); ++i) c[exps[i]] = witness[i + 1];
        return c;
    }());
    bool ok = fully_splits(f) && f.coeff(0) != 0 && f.coeff(exps.back()) != 0;
    if (ok && strict) {
        for (u64 e : exps) ok = ok && f.coeff(e) != 0;
    }
    if (ok) {
        // No nonzero coefficient outside the claimed support.
        for (u64 e = 1; e < exps.back(); ++e) {
            if (f.coeff(e) != 0 &&
                !std::binary_search(exps.begin(), exps.end(), e)) {
                ok = false;
                break;
            }
        }
    }
    if (!ok) {
        throw InvariantViolationError("census: stored witness failed re-validation");
    }
}

void mul_linear(std::vector<u64>& c, u64 r, u64 p) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
        const u64 sub = mod_mul(r, c[i], p);
        c[i] = c[i - 1] >= sub ? c[i - 1] - sub : c[i - 1] + p - sub;
    }
    const u64 sub = mod_mul(r, c[0], p);
    c[0] = sub == 0 ? 0 : p - sub;
}

void div_linear(std::vector<u64>& c, u64 r, u64 p) {
    u64 acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const u64 b = (c[i] + mod_mul(r, acc, p)) % p;
        c[i] = acc;
        acc = b;
    }
    c.pop_back();  // acc is the remainder, zero for exact division
}

}  // namespace

SplitWitness pattern_splittable(const ExponentPattern& pattern, const CensusOptions& opts) {
    const FieldContext& ctx = pattern.ctx();
    const u64 p = ctx.p;
    const unsigned k = pattern.k();

    if (coefficient_space(p, k, kCoefficientSpaceCap) == ~u64{0}) {
        throw BudgetExceededError("pattern_splittable: coefficient space (p-1)^k exceeds " +
                                  std::to_string(kCoefficientSpaceCap));
    }

    const auto scales = scale_vectors(pattern);
    const u64 interior_lo = opts.strict_pattern ? 1 : 0;

    std::vector<u64> a(k);
    for (unsigned i = 0; i + 1 < k; ++i) a[i] = interior_lo;
    a[k - 1] = 1;  // the top coefficient stays nonzero: degree is exactly t_k

    while (true) {
        if (orbit_canonical(a, scales, p)) {
            DensePoly f(ctx, dense_coeffs(pattern, a));
            if (fully_splits(f)) {
                SplitWitness w;
                w.splittable = true;
                w.coeffs.reserve(k + 1);
                w.coeffs.push_back(1);
                w.coeffs.insert(w.coeffs.end(), a.begin(), a.end());
                return w;
            }
        }
        int i = static_cast<int>(k) - 1;
        while (i >= 0) {
            if (++a[i] < p) break;
            a[i] = (i == static_cast<int>(k) - 1) ? 1 : interior_lo;
            --i;
        }
        if (i < 0) break;
    }
    return {};
}

CensusRecord count_split_patterns(const FieldContext& ctx, unsigned k, u64 t,
                                  const CensusOptions& opts) {
    if (k < 1) throw Error("census: k must be >= 1");
    if (t < 1 || t >= ctx.p) throw Error("census: need 1 <= t < p");

    CensusRecord rec;
    rec.p = ctx.p;
    rec.k = k;
    rec.t = t;
    rec.strict_pattern = opts.strict_pattern;
    const PatternCountBound bound = pattern_count_bound(ctx.p, k, t);
    rec.trivial_bound = bound.trivial_bound;
    rec.bound_leading = bound.leading;
    rec.nontrivial = bound.nontrivial;

    const u64 n_patterns = binomial_saturating(t - 1, k - 1);
    const u64 per_pattern = coefficient_space(ctx.p, k, ~u64{0});
    if (n_patterns != 0 &&
        (per_pattern == ~u64{0} || per_pattern > opts.budget / n_patterns)) {
        throw BudgetExceededError("census: " + std::to_string(n_patterns) + " patterns x (p-1)^" +
                                  std::to_string(k) + " coefficient vectors exceed budget " +
                                  std::to_string(opts.budget));
    }
    if (t < k) return rec;

    const auto handle_pattern = [&](const std::vector<u64>& exps,
                                    std::vector<PatternResult>& out) {
        const ExponentPattern pattern(ctx, exps);
        PatternResult r;
        r.exps = exps;
        r.d = gcd_parameter(pattern);
        SplitWitness w = pattern_splittable(pattern, opts);
        r.splittable = w.splittable;
        if (w.splittable) {
            check_witness(ctx, exps, w.coeffs, opts.strict_pattern);
            r.witness = std::move(w.coeffs);
            const DensePoly f(ctx, [&] {
                std::vector<u64> c(exps.back() + 1, 0);
                c[0] = r.witness[0];
                for (std::size_t i = 0; i < exps.size(); ++i) c[exps[i]] = r.witness[i + 1];
                return c;
            }());
            const RootCountRecord roots = count_roots_dense(f);
            if (roots.max_multiplicity > k) {
                throw InvariantViolationError("census: witness root multiplicity exceeds k");
            }
            r.witness_roots = roots.distinct_roots;
        }
        out.push_back(std::move(r));
    };

    // Deterministic for any job count: one block per t_1 value, blocks merged
    // in t_1 order.
    const std::size_t n_blocks = (k == 1) ? 1 : static_cast<std::size_t>(t - k + 1);
    std::vector<std::vector<PatternResult>> blocks(n_blocks);
    parallel_blocks(n_blocks, opts.jobs, [&](std::size_t b) {
        auto& out = blocks[b];
        if (k == 1) {
            handle_pattern({t}, out);
            return;
        }
        const u64 t1 = b + 1;
        std::vector<u64> exps(k);
        exps[0] = t1;
        // Suffixes (t_2 < ... < t_k = t) from (t_1, t] are patterns of the
        // shifted parameters (k-1, t - t_1) translated by t_1.
        for_each_pattern(k - 1, t - t1, [&](const std::vector<u64>& shifted) {
            for (std::size_t i = 0; i < shifted.size(); ++i) exps[i + 1] = shifted[i] + t1;
            handle_pattern(exps, out);
        });
    });

    for (auto& blk : blocks) {
        for (auto& r : blk) {
            if (r.splittable) ++rec.n_split;
            rec.per_pattern.push_back(std::move(r));
        }
    }
    if (rec.n_split > rec.trivial_bound) {
        throw InvariantViolationError("census: count exceeds the pattern total");
    }
    return rec;
}

u64 count_split_patterns_rootside(const FieldContext& ctx, unsigned k, u64 t, u64 budget) {
    if (k < 1) throw Error("rootside census: k must be >= 1");
    if (t < 1 || t >= ctx.p) throw Error("rootside census: need 1 <= t < p");
    const u64 n_multisets = binomial_saturating(ctx.p - 2 + t, t);
    if (n_multisets > budget) {
        throw BudgetExceededError("rootside census: " + std::to_string(n_multisets) +
                                  " root multisets exceed budget " + std::to_string(budget));
    }
    if (t < k) return 0;

    const u64 p = ctx.p;
    std::set<std::vector<u64>> patterns;
    std::vector<u64> poly{1};  // monic running product of (X - r_i)
    std::vector<u64> exps;

    const auto leaf = [&] {
        unsigned nonzero = 0;
        for (u64 v : poly) nonzero += (v != 0);
        if (nonzero != k + 1) return;
        exps.clear();
        for (u64 e = 1; e <= t; ++e) {
            if (poly[e] != 0) exps.push_back(e);
        }
        patterns.insert(exps);
    };

    const auto descend = [&](auto&& self, u64 depth, u64 min_root) -> void {
        if (depth == t) {
            leaf();
            return;
        }
        for (u64 r = min_root; r < p; ++r) {
            mul_linear(poly, r, p);
            self(self, depth + 1, r);
            div_linear(poly, r, p);
        }
    };
    descend(descend, 0, 1);
    return static_cast<u64>(patterns.size());
}

PatternCountBound pattern_count_bound(u64 p, unsigned k, u64 t) {
    if (k < 1) throw Error("pattern_count_bound: k must be >= 1");
    PatternCountBound b;
    const long long c = ceil_half(static_cast<long long>(k) - 3);
    const double t_exp = static_cast<double>(k) - static_cast<double>(k) * c - 1.0;
    const double p_exp = (static_cast<double>(k) - 1.0) * c;
    b.leading = std::pow(static_cast<double>(t), t_exp) * std::pow(static_cast<double>(p), p_exp);
    b.trivial_bound = binomial_saturating(t - 1, k - 1);
    b.nontrivial =
        (k > 3) && (static_cast<double>(t) > std::pow(static_cast<double>(p), 1.0 - 1.0 / k));
    b.simplified_exponent = static_cast<int>((k + 1) / 2 + 1);  // ceil(k/2) + 1
    return b;
}

const char* endpoint_case_name(EndpointCase c) {
    switch (c) {
        case EndpointCase::both: return "both";
        case EndpointCase::one: return "one";
        case EndpointCase::neither: return "neither";
    }
    return "?";
}

GraphClassReport graph_class_report(const FieldContext& ctx, unsigned k, u64 t, u64 threshold,
                                    u64 budget) {
    GraphClassReport rep;
    rep.p = ctx.p;
    rep.k = k;
    rep.t = t;
    rep.d = threshold;

    const double td = static_cast<double>(t) / static_cast<double>(threshold);
    const double tt = static_cast<double>(t);
    const long long kk = k;
    rep.bound_both = std::pow(tt, static_cast<double>(floor_half(kk - 3))) *
                     std::pow(td, static_cast<double>(ceil_half(kk + 1)));
    rep.bound_one = std::pow(tt, static_cast<double>(floor_half(kk - 1))) *
                    std::pow(td, static_cast<double>(ceil_half(kk - 1)));
    rep.bound_neither = std::pow(tt, static_cast<double>(floor_half(kk + 1))) *
                        std::pow(td, static_cast<double>(ceil_half(kk - 3)));
    if (t >= threshold) {
        // Exact ratios are D^2 and D; allow rounding headroom only.
        const double tol = 1e-9 * rep.bound_neither;
        if (rep.bound_neither + tol < rep.bound_both ||
            rep.bound_neither + tol < rep.bound_one) {
            throw InvariantViolationError(
                "graph_class_report: neither-endpoint bound failed to dominate");
        }
    }

    const auto classes = classify_patterns(ctx, k, t, threshold, budget);
    for (const auto& [key, count] : classes) {
        GraphClassEntry entry;
        entry.key = key;
        entry.count = count;
        const PatternGraph g = PatternGraph::from_canonical_key(static_cast<int>(k) + 1, key);
        entry.min_deg = min_degree(g);
        if (entry.min_deg == 0) {
            entry.excluded = true;
        } else {
            const DominatingSet mds = min_dominating_set(g);
            entry.gamma = static_cast<unsigned>(mds.members.size());
            const DominatingSet padded = padded_dominating_set(g);
            entry.dominating = padded.members;
            const bool has_zero =
                std::binary_search(entry.dominating.begin(), entry.dominating.end(), 0);
            const bool has_top = std::binary_search(entry.dominating.begin(),
                                                    entry.dominating.end(), static_cast<int>(k));
            if (has_zero && has_top) {
                entry.endpoint_case = EndpointCase::both;
                entry.bound_value = rep.bound_both;
            } else if (has_zero || has_top) {
                entry.endpoint_case = EndpointCase::one;
                entry.bound_value = rep.bound_one;
            } else {
                entry.endpoint_case = EndpointCase::neither;
                entry.bound_value = rep.bound_neither;
            }
        }
        rep.total_patterns += count;
        rep.entries.push_back(std::move(entry));
    }

    if (rep.total_patterns != binomial_saturating(t - 1, k - 1)) {
        throw InvariantViolationError("graph_class_report: class counts fail to conserve");
    }
    return rep;
}

}  // namespace splitcensus
