#ifndef SPLITCENSUS_POLYARITH_HPP
#define SPLITCENSUS_POLYARITH_HPP

// Dense polynomial arithmetic over F_p: multiplication (schoolbook with a
// Karatsuba cutover), division with remainder, gcd, formal derivative,
// squarefree part, and X^p mod f.

#include <span>
#include <utility>
#include <vector>

#include "splitcensus/fieldcore.hpp"

namespace splitcensus {

/// Canonical dense polynomial mod p: coeffs[i] is the coefficient of X^i,
/// no stored leading zeros, the zero polynomial has an empty vector.
class DensePoly {
  public:
    explicit DensePoly(const FieldContext& ctx) : ctx_(&ctx) {}
    DensePoly(const FieldContext& ctx, std::vector<u64> coeffs);

    static DensePoly constant(const FieldContext& ctx, u64 c);
    static DensePoly x(const FieldContext& ctx);
    static DensePoly monomial(const FieldContext& ctx, u64 coeff, u64 exp);
    /// prod (X - r_i); roots need not be distinct.
    static DensePoly from_roots(const FieldContext& ctx, std::span<const u64> roots);

    const FieldContext& ctx() const { return *ctx_; }
    const std::vector<u64>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    i64 degree() const { return static_cast<i64>(coeffs_.size()) - 1; }
    u64 coeff(u64 i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    u64 leading() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    u64 evaluate(u64 x) const;  // Horner

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return a.ctx_->p == b.ctx_->p && a.coeffs_ == b.coeffs_;
    }

  private:
    const FieldContext* ctx_;
    std::vector<u64> coeffs_;

    void trim();
    friend DensePoly add(const DensePoly&, const DensePoly&);
    friend DensePoly sub(const DensePoly&, const DensePoly&);
    friend DensePoly mul(const DensePoly&, const DensePoly&);
    friend std::pair<DensePoly, DensePoly> divrem(const DensePoly&, const DensePoly&);
};

DensePoly add(const DensePoly& f, const DensePoly& g);
DensePoly sub(const DensePoly& f, const DensePoly& g);
DensePoly mul(const DensePoly& f, const DensePoly& g);

/// f = q*g + r with deg r < deg g. Throws DivisionByZeroPolyError.
std::pair<DensePoly, DensePoly> divrem(const DensePoly& f, const DensePoly& g);

/// Monic gcd. gcd(f, 0) is the monic scaling of f. Throws BothZeroError.
DensePoly poly_gcd(const DensePoly& f, const DensePoly& g);

DensePoly formal_derivative(const DensePoly& f);

DensePoly make_monic(const DensePoly& f);

/// Radical of f: the monic product of its distinct irreducible factors,
/// computed as f / gcd(f, f'). Requires deg f < p (every multiplicity is
/// then below the characteristic, so the single gcd step is exact).
/// Throws DegreeTooHighError when deg f >= p.
DensePoly squarefree_part(const DensePoly& f);

/// X^p reduced modulo f, by square-and-multiply in F_p[X]/(f).
/// Throws ConstantModulusError when deg f < 1.
DensePoly x_pow_p_mod(const DensePoly& f);

}  // namespace splitcensus

#endif
