#include "splitcensus/polyarith.hpp"

#include <algorithm>
#include <string>

namespace splitcensus {

namespace {

inline u64 addm(u64 a, u64 b, u64 p) {
    const u64 s = a + b;  // p <= 2^62 keeps this overflow-free
    return s >= p ? s - p : s;
}

inline u64 subm(u64 a, u64 b, u64 p) {
    return a >= b ? a - b : a + p - b;
}

constexpr std::size_t kKaratsubaThreshold = 64;

void schoolbook_into(const std::vector<u64>& a, const std::vector<u64>& b,
                     std::vector<u64>& out, u64 p) {
    out.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = addm(out[i + j], mod_mul(a[i], b[j], p), p);
        }
    }
}

std::vector<u64> mul_vec(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) {
        std::vector<u64> out;
        schoolbook_into(a, b, out, p);
        return out;
    }

    const std::size_t h = std::max(a.size(), b.size()) / 2;
    const auto lo = [&](const std::vector<u64>& v) {
        return std::vector<u64>(v.begin(), v.begin() + std::min(h, v.size()));
    };
    const auto hi = [&](const std::vector<u64>& v) {
        return v.size() > h ? std::vector<u64>(v.begin() + h, v.end()) : std::vector<u64>{};
    };
    const auto add_vec = [&](const std::vector<u64>& x, const std::vector<u64>& y) {
        std::vector<u64> s(std::max(x.size(), y.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i) s[i] = addm(s[i], y[i], p);
        return s;
    };

    const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    const auto z0 = mul_vec(a0, b0, p);
    const auto z2 = mul_vec(a1, b1, p);
    const auto z1 = mul_vec(add_vec(a0, a1), add_vec(b0, b1), p);

    std::vector<u64> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = addm(out[i], z0[i], p);
    for (std::size_t i = 0; i < z1.size(); ++i) {
        u64 mid = z1[i];
        if (i < z0.size()) mid = subm(mid, z0[i], p);
        if (i < z2.size()) mid = subm(mid, z2[i], p);
        out[i + h] = addm(out[i + h], mid, p);
    }
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = addm(out[i + 2 * h], z2[i], p);
    return out;
}

void require_same_field(const DensePoly& f, const DensePoly& g) {
    if (f.ctx().p != g.ctx().p) {
        throw ContextMismatchError("polynomials over different prime fields: p=" +
                                   std::to_string(f.ctx().p) + " vs p=" +
                                   std::to_string(g.ctx().p));
    }
}

}  // namespace

DensePoly::DensePoly(const FieldContext& ctx, std::vector<u64> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
    for (u64& c : coeffs_) c %= ctx.p;
    trim();
}

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::constant(const FieldContext& ctx, u64 c) {
    return DensePoly(ctx, std::vector<u64>{c});
}

DensePoly DensePoly::x(const FieldContext& ctx) {
    return DensePoly(ctx, std::vector<u64>{0, 1});
}

DensePoly DensePoly::monomial(const FieldContext& ctx, u64 coeff, u64 exp) {
    coeff %= ctx.p;
    if (coeff == 0) return DensePoly(ctx);
    std::vector<u64> c(exp + 1, 0);
    c[exp] = coeff;
    DensePoly f(ctx);
    f.coeffs_ = std::move(c);
    return f;
}

DensePoly DensePoly::from_roots(const FieldContext& ctx, std::span<const u64> roots) {
    std::vector<u64> c{1};
    c.reserve(roots.size() + 1);
    for (u64 r : roots) {
        r %= ctx.p;
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i >= 1; --i) {
            c[i] = subm(c[i - 1], mod_mul(r, c[i], ctx.p), ctx.p);
        }
        c[0] = subm(0, mod_mul(r, c[0], ctx.p), ctx.p);
    }
    DensePoly f(ctx);
    f.coeffs_ = std::move(c);
    return f;
}

u64 DensePoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

u64 DensePoly::evaluate(u64 x) const {
    x %= ctx_->p;
    u64 acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = addm(mod_mul(acc, x, ctx_->p), coeffs_[i], ctx_->p);
    }
    return acc;
}

DensePoly add(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const u64 p = f.ctx().p;
    std::vector<u64> c(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] = addm(c[i], g.coeffs_[i], p);
    DensePoly r(f.ctx());
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

DensePoly sub(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const u64 p = f.ctx().p;
    std::vector<u64> c(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c[i] = f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] = subm(c[i], g.coeffs_[i], p);
    DensePoly r(f.ctx());
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

DensePoly mul(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    DensePoly r(f.ctx());
    r.coeffs_ = mul_vec(f.coeffs_, g.coeffs_, f.ctx().p);
    r.trim();
    return r;
}

std::pair<DensePoly, DensePoly> divrem(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw DivisionByZeroPolyError("divrem: zero divisor");
    const u64 p = f.ctx().p;

    if (f.degree() < g.degree()) return {DensePoly(f.ctx()), f};

    std::vector<u64> rem = f.coeffs_;
    const std::size_t dg = g.coeffs_.size() - 1;
    std::vector<u64> quot(rem.size() - dg, 0);
    const u64 lead_inv = mod_pow(g.coeffs_.back(), p - 2, p);

    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i] == 0) continue;
        const u64 factor = mod_mul(rem[i], lead_inv, p);
        quot[i - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[i - dg + j] = subm(rem[i - dg + j], mod_mul(factor, g.coeffs_[j], p), p);
        }
    }

    DensePoly q(f.ctx()), r(f.ctx());
    q.coeffs_ = std::move(quot);
    q.trim();
    rem.resize(dg);
    r.coeffs_ = std::move(rem);
    r.trim();
    return {std::move(q), std::move(r)};
}

DensePoly make_monic(const DensePoly& f) {
    if (f.is_zero()) return f;
    const u64 p = f.ctx().p;
    if (f.leading() == 1) return f;
    const u64 inv = mod_pow(f.leading(), p - 2, p);
    std::vector<u64> c = f.coeffs();
    for (u64& v : c) v = mod_mul(v, inv, p);
    return DensePoly(f.ctx(), std::move(c));
}

DensePoly poly_gcd(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) throw BothZeroError("poly_gcd(0, 0) is undefined");
    DensePoly a = f, b = g;
    while (!b.is_zero()) {
        DensePoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

DensePoly formal_derivative(const DensePoly& f) {
    if (f.coeffs().size() <= 1) return DensePoly(f.ctx());
    const u64 p = f.ctx().p;
    std::vector<u64> c(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        c[i - 1] = mod_mul(f.coeffs()[i], i % p, p);
    }
    return DensePoly(f.ctx(), std::move(c));
}

DensePoly squarefree_part(const DensePoly& f) {
    if (f.is_zero()) throw Error("squarefree_part: zero polynomial");
    if (static_cast<u64>(f.degree()) >= f.ctx().p) {
        throw DegreeTooHighError("squarefree_part: degree " + std::to_string(f.degree()) +
                                 " >= p = " + std::to_string(f.ctx().p));
    }
    if (f.degree() == 0) return DensePoly::constant(f.ctx(), 1);
    // deg f < p: every factor multiplicity is below the characteristic, so
    // f / gcd(f, f') is exactly the radical. f' != 0 since deg f in [1, p).
    const DensePoly g = poly_gcd(f, formal_derivative(f));
    return make_monic(divrem(f, g).first);
}

DensePoly x_pow_p_mod(const DensePoly& f) {
    if (f.degree() < 1) throw ConstantModulusError("x_pow_p_mod: modulus must be nonconstant");
    const FieldContext& ctx = f.ctx();
    DensePoly base = divrem(DensePoly::x(ctx), f).second;
    DensePoly result = DensePoly::constant(ctx, 1);  // deg f >= 1, already reduced
    u64 e = ctx.p;
    while (e != 0) {
        if (e & 1) result = divrem(mul(result, base), f).second;
        e >>= 1;
        if (e != 0) base = divrem(mul(base, base), f).second;
    }
    return result;
}

}  // namespace splitcensus
