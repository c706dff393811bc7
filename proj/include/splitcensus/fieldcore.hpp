#ifndef SPLITCENSUS_FIELDCORE_HPP
#define SPLITCENSUS_FIELDCORE_HPP

// Exact arithmetic modulo an odd prime p, plus the integer utilities
// (primality, factorization of p-1, divisor lists) the other layers build on.

#include <cstdint>
#include <vector>

#include "splitcensus/errors.hpp"

namespace splitcensus {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest accepted modulus: keeps every product of two residues inside
// 128-bit intermediates and every value inside a signed 64-bit lane.
inline constexpr u64 kMaxModulus = (u64{1} << 62);

/// Validated odd prime modulus together with the factored structure of p-1.
/// Immutable after construction; safe to share across threads.
struct FieldContext {
    u64 p = 0;
    std::vector<u64> pm1_factors;   // prime factors of p-1, ascending, with multiplicity
    std::vector<u64> pm1_divisors;  // all divisors of p-1, ascending (starts 1, ends p-1)
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization with multiplicity, ascending. Trial division up to
/// 10^6, Pollard rho (Brent) on any remaining composite cofactor.
std::vector<u64> factorize(u64 n);

/// Builds a context for odd prime p. Throws NotPrimeError / TooLargeError.
FieldContext make_context(u64 p);

u64 mod_mul(u64 a, u64 b, u64 p);
u64 mod_pow(u64 base, u64 exp, u64 p);

inline u64 mod_pow(u64 base, u64 exp, const FieldContext& ctx) {
    return mod_pow(base, exp, ctx.p);
}

/// Inverse of a in F_p^*. Throws ZeroInverseError when a == 0 (mod p).
u64 mod_inv(u64 a, const FieldContext& ctx);

u64 gcd(u64 a, u64 b);

/// All divisors d of p-1 with d >= lower_bound, ascending.
std::vector<u64> divisors_at_least(const FieldContext& ctx, u64 lower_bound);

/// C(n, r) saturating at UINT64_MAX; used for budget checks and trivial bounds.
u64 binomial_saturating(u64 n, u64 r);

}  // namespace splitcensus

#endif
