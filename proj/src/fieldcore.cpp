#include "splitcensus/fieldcore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace splitcensus {

u64 mod_mul(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 mod_pow(u64 base, u64 exp, u64 p) {
    u64 result = 1 % p;
    u64 b = base % p;
    while (exp != 0) {
        if (exp & 1) result = mod_mul(result, b, p);
        b = mod_mul(b, b, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    // Witness set exact for every 64-bit integer.
    constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0) return n == w;
    }
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    for (u64 w : witnesses) {
        u64 x = mod_pow(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;

// Brent's cycle variant; n odd composite, no factor below kTrialLimit.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power <<= 1;
                lam = 0;
            }
            y = (mod_mul(y, y, n) + c) % n;
            ++lam;
            const u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; retry with new c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<u64> factorize(u64 n) {
    std::vector<u64> factors;
    if (n <= 1) return factors;
    for (u64 q = 2; q <= kTrialLimit && q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            factors.push_back(q);
            n /= q;
        }
    }
    if (n > 1) factor_into(n, factors);
    std::sort(factors.begin(), factors.end());
    return factors;
}

FieldContext make_context(u64 p) {
    if (p > kMaxModulus) {
        throw TooLargeError("make_context: modulus " + std::to_string(p) +
                            " exceeds the 64-bit guard");
    }
    if (p < 3 || !is_prime(p)) {
        throw NotPrimeError("make_context: " + std::to_string(p) + " is not an odd prime");
    }
    FieldContext ctx;
    ctx.p = p;
    ctx.pm1_factors = factorize(p - 1);

    // Divisors from the factorization: extend by each prime power in turn.
    std::vector<u64> divisors{1};
    std::size_t i = 0;
    while (i < ctx.pm1_factors.size()) {
        const u64 q = ctx.pm1_factors[i];
        std::size_t j = i;
        while (j < ctx.pm1_factors.size() && ctx.pm1_factors[j] == q) ++j;
        const std::size_t mult = j - i;
        const std::size_t base_count = divisors.size();
        u64 power = 1;
        for (std::size_t e = 1; e <= mult; ++e) {
            power *= q;
            for (std::size_t b = 0; b < base_count; ++b) {
                divisors.push_back(divisors[b] * power);
            }
        }
        i = j;
    }
    std::sort(divisors.begin(), divisors.end());
    ctx.pm1_divisors = std::move(divisors);
    return ctx;
}

u64 mod_inv(u64 a, const FieldContext& ctx) {
    a %= ctx.p;
    if (a == 0) throw ZeroInverseError("mod_inv: zero has no inverse");
    return mod_pow(a, ctx.p - 2, ctx.p);
}

u64 gcd(u64 a, u64 b) {
    return std::gcd(a, b);
}

std::vector<u64> divisors_at_least(const FieldContext& ctx, u64 lower_bound) {
    const auto it = std::lower_bound(ctx.pm1_divisors.begin(), ctx.pm1_divisors.end(),
                                     lower_bound);
    return std::vector<u64>(it, ctx.pm1_divisors.end());
}

u64 binomial_saturating(u64 n, u64 r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    u128 acc = 1;
    constexpr u128 kMax = ~u64{0};
    for (u64 i = 1; i <= r; ++i) {
        // Exact at each step: acc becomes C(n-r+i, i), which is nondecreasing
        // in i, so saturation is final. acc <= 2^64-1 here keeps the product
        // inside 128 bits.
        acc = acc * (n - r + i) / i;
        if (acc > kMax) return ~u64{0};
    }
    return static_cast<u64>(acc);
}

}  // namespace splitcensus
