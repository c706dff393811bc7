#ifndef SPLITCENSUS_LACUNARY_HPP
#define SPLITCENSUS_LACUNARY_HPP

// Sparse polynomials a_0 + a_1 X^{t_1} + ... + a_k X^{t_k} over F_p:
// evaluation, exact root counting over F_p^*, root multiplicity, the
// complete-splitting test, and the exact determinant identity for the
// derivative-system matrix of an exponent pattern.

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "splitcensus/polyarith.hpp"

namespace splitcensus {

/// Strictly increasing exponents (t_1,...,t_k) with 1 <= t_1 < ... < t_k < p.
/// t_0 = 0 is implicit and never stored.
class ExponentPattern {
  public:
    ExponentPattern(const FieldContext& ctx, std::vector<u64> exps);

    const FieldContext& ctx() const { return *ctx_; }
    unsigned k() const { return static_cast<unsigned>(exps_.size()); }
    u64 top() const { return exps_.back(); }  // t_k
    const std::vector<u64>& exps() const { return exps_; }
    /// (0, t_1, ..., t_k)
    std::vector<u64> extended() const;

  private:
    const FieldContext* ctx_;
    std::vector<u64> exps_;
};

/// Coefficients (a_0,...,a_k) attached to a pattern, all in F_p^*, so the
/// polynomial witnesses exactly its pattern: nonzero constant term and
/// degree exactly t_k.
class LacunaryPoly {
  public:
    LacunaryPoly(ExponentPattern pattern, std::vector<u64> coeffs);

    const ExponentPattern& pattern() const { return pattern_; }
    const std::vector<u64>& coeffs() const { return coeffs_; }
    const FieldContext& ctx() const { return pattern_.ctx(); }

    /// sum a_i x^{t_i}, one modular exponentiation per term.
    u64 evaluate(u64 x) const;

    DensePoly to_dense() const;

  private:
    ExponentPattern pattern_;
    std::vector<u64> coeffs_;
};

struct RootCountRecord {
    u64 distinct_roots = 0;           // solutions in F_p^*, each counted once
    u64 total_with_multiplicity = 0;  // sum of multiplicities over those roots
    u64 max_multiplicity = 0;
};

// Brute-force budget for whole-field scans.
inline constexpr u64 kBruteForceMaxP = u64{1} << 24;

/// Exact root statistics over F_p^* by evaluating at every point, with
/// multiplicities from repeated synthetic division of the dense image.
/// No structural guarantees assumed; usable for any dense polynomial.
RootCountRecord count_roots_dense(const DensePoly& f);

/// Same scan for a lacunary polynomial; additionally checks the guaranteed
/// bounds (every multiplicity <= k, total <= t_k) and throws
/// InvariantViolationError if one fails. Throws BudgetExceededError when
/// p exceeds the brute-force budget.
RootCountRecord count_roots_brute(const LacunaryPoly& f);

/// Largest m with (X - r)^m dividing f, by repeated synthetic division.
u64 root_multiplicity(const DensePoly& f, u64 r);
u64 root_multiplicity(const LacunaryPoly& f, u64 r);

/// True iff f factors entirely into linear factors over F_p. Test: reduce
/// to the radical s, then s splits into distinct linears iff X^p = X mod s
/// (valid because deg f < p). Requires deg f >= 1.
bool fully_splits(const DensePoly& f);
bool fully_splits(const LacunaryPoly& f);

/// (k+1)x(k+1) exact integer matrix of the derivative system of a pattern:
/// entry (i, j) = prod_{h=0}^{j-1} (t_i - h) over the extended exponents
/// (t_0 = 0 included); the empty product (j = 0) is 1.
std::vector<std::vector<mpz_class>> derivative_matrix(const ExponentPattern& pattern);

struct DeterminantIdentity {
    mpz_class det;      // exact determinant of derivative_matrix
    mpz_class product;  // prod_{0 <= i < j <= k} (t_j - t_i)
    bool equal = false;
};

/// Exact check (fraction-free elimination, arbitrary-precision integers)
/// that the derivative-matrix determinant equals the pairwise difference
/// product; nonzero for every valid pattern.
DeterminantIdentity determinant_identity_check(const ExponentPattern& pattern);

/// Exact integer determinant via Bareiss elimination.
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m);

/// Calls fn with every exponent vector (t_1 < ... < t_{k-1} < t_k = t) in
/// lexicographic order; the vector is reused storage. No-op when t < k.
void for_each_pattern(unsigned k, u64 t, const std::function<void(const std::vector<u64>&)>& fn);

}  // namespace splitcensus

#endif
