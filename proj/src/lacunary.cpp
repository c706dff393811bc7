#include "splitcensus/lacunary.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace splitcensus {

ExponentPattern::ExponentPattern(const FieldContext& ctx, std::vector<u64> exps)
    : ctx_(&ctx), exps_(std::move(exps)) {
    if (exps_.empty()) throw Error("exponent pattern: k must be >= 1");
    if (exps_.front() < 1) throw Error("exponent pattern: t_1 must be >= 1");
    for (std::size_t i = 1; i < exps_.size(); ++i) {
        if (exps_[i] <= exps_[i - 1]) {
            throw Error("exponent pattern: exponents must be strictly increasing");
        }
    }
    if (exps_.back() >= ctx.p) {
        throw Error("exponent pattern: t_k = " + std::to_string(exps_.back()) +
                    " must be below p = " + std::to_string(ctx.p));
    }
}

std::vector<u64> ExponentPattern::extended() const {
    std::vector<u64> ext;
    ext.reserve(exps_.size() + 1);
    ext.push_back(0);
    ext.insert(ext.end(), exps_.begin(), exps_.end());
    return ext;
}

LacunaryPoly::LacunaryPoly(ExponentPattern pattern, std::vector<u64> coeffs)
    : pattern_(std::move(pattern)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != pattern_.k() + 1) {
        throw Error("lacunary polynomial: expected k+1 coefficients");
    }
    const u64 p = pattern_.ctx().p;
    for (u64& c : coeffs_) {
        c %= p;
        if (c == 0) {
            throw Error("lacunary polynomial: all coefficients must be nonzero "
                        "(exact-pattern convention)");
        }
    }
}

u64 LacunaryPoly::evaluate(u64 x) const {
    const u64 p = ctx().p;
    x %= p;
    u64 acc = coeffs_[0];
    const auto& exps = pattern_.exps();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const u64 term = mod_mul(coeffs_[i + 1], mod_pow(x, exps[i], p), p);
        acc = (acc + term) % p;
    }
    return acc;
}

DensePoly LacunaryPoly::to_dense() const {
    std::vector<u64> c(pattern_.top() + 1, 0);
    c[0] = coeffs_[0];
    const auto& exps = pattern_.exps();
    for (std::size_t i = 0; i < exps.size(); ++i) c[exps[i]] = coeffs_[i + 1];
    return DensePoly(ctx(), std::move(c));
}

namespace {

// Synthetic division of c by (X - r); returns the remainder and leaves the
// quotient in c.
u64 synthetic_divide(std::vector<u64>& c, u64 r, u64 p) {
    u64 acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const u64 b = (c[i] + mod_mul(r, acc, p)) % p;
        c[i] = acc;
        acc = b;
    }
    c.pop_back();
    return acc;
}

u64 multiplicity_of(std::vector<u64> c, u64 r, u64 p) {
    u64 m = 0;
    while (!c.empty()) {
        std::vector<u64> trial = c;
        if (synthetic_divide(trial, r, p) != 0) break;
        ++m;
        c = std::move(trial);
    }
    return m;
}

}  // namespace

u64 root_multiplicity(const DensePoly& f, u64 r) {
    if (f.is_zero()) throw Error("root_multiplicity: zero polynomial");
    return multiplicity_of(f.coeffs(), r % f.ctx().p, f.ctx().p);
}

u64 root_multiplicity(const LacunaryPoly& f, u64 r) {
    return root_multiplicity(f.to_dense(), r);
}

RootCountRecord count_roots_dense(const DensePoly& f) {
    if (f.is_zero()) throw Error("count_roots_dense: zero polynomial");
    const u64 p = f.ctx().p;
    if (p > kBruteForceMaxP) {
        throw BudgetExceededError("count_roots_dense: p exceeds the brute-force budget");
    }
    RootCountRecord rec;
    for (u64 x = 1; x < p; ++x) {
        if (f.evaluate(x) != 0) continue;
        ++rec.distinct_roots;
        const u64 m = multiplicity_of(f.coeffs(), x, p);
        rec.total_with_multiplicity += m;
        rec.max_multiplicity = std::max(rec.max_multiplicity, m);
    }
    return rec;
}

RootCountRecord count_roots_brute(const LacunaryPoly& f) {
    const u64 p = f.ctx().p;
    if (p > kBruteForceMaxP) {
        throw BudgetExceededError("count_roots_brute: p exceeds the brute-force budget");
    }
    std::vector<u64> roots;
    for (u64 x = 1; x < p; ++x) {
        if (f.evaluate(x) == 0) roots.push_back(x);
    }
    RootCountRecord rec;
    rec.distinct_roots = roots.size();
    if (!roots.empty()) {
        const DensePoly dense = f.to_dense();
        for (u64 r : roots) {
            const u64 m = multiplicity_of(dense.coeffs(), r, p);
            rec.total_with_multiplicity += m;
            rec.max_multiplicity = std::max(rec.max_multiplicity, m);
        }
    }
    const u64 t_k = f.pattern().top();
    if (rec.max_multiplicity > f.pattern().k() || rec.total_with_multiplicity > t_k ||
        rec.distinct_roots > t_k) {
        throw InvariantViolationError(
            "count_roots_brute: root statistics exceed the guaranteed bounds "
            "(max multiplicity " + std::to_string(rec.max_multiplicity) +
            ", k = " + std::to_string(f.pattern().k()) + ")");
    }
    return rec;
}

bool fully_splits(const DensePoly& f) {
    if (f.degree() < 1) throw Error("fully_splits: polynomial must be nonconstant");
    const DensePoly s = squarefree_part(f);
    const DensePoly xp = x_pow_p_mod(s);
    const DensePoly xr = divrem(DensePoly::x(f.ctx()), s).second;
    return xp == xr;
}

bool fully_splits(const LacunaryPoly& f) {
    return fully_splits(f.to_dense());
}

std::vector<std::vector<mpz_class>> derivative_matrix(const ExponentPattern& pattern) {
    const std::vector<u64> ext = pattern.extended();
    const std::size_t n = ext.size();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class ti(static_cast<unsigned long>(ext[i]));
        m[i][0] = 1;
        for (std::size_t j = 1; j < n; ++j) {
            m[i][j] = m[i][j - 1] * (ti - static_cast<long>(j - 1));
        }
    }
    return m;
}

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        // Bareiss fraction-free step: divisions are exact.
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

DeterminantIdentity determinant_identity_check(const ExponentPattern& pattern) {
    DeterminantIdentity result;
    result.det = integer_determinant(derivative_matrix(pattern));
    const std::vector<u64> ext = pattern.extended();
    result.product = 1;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
            result.product *= mpz_class(static_cast<unsigned long>(ext[j] - ext[i]));
        }
    }
    result.equal = (result.det == result.product);
    return result;
}

void for_each_pattern(unsigned k, u64 t, const std::function<void(const std::vector<u64>&)>& fn) {
    if (k == 0 || t < k) return;
    std::vector<u64> exps(k);
    exps[k - 1] = t;
    if (k == 1) {
        fn(exps);
        return;
    }
    // Lexicographic combinations of (t_1 < ... < t_{k-1}) from [1, t-1].
    for (unsigned i = 0; i + 1 < k; ++i) exps[i] = i + 1;
    while (true) {
        fn(exps);
        unsigned i = k - 1;
        while (i > 0 && exps[i - 1] == t - (k - i)) --i;
        if (i == 0) break;
        ++exps[i - 1];
        for (unsigned j = i; j + 1 < k; ++j) exps[j] = exps[j - 1] + 1;
    }
}

}  // namespace splitcensus
