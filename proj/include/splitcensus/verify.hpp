#ifndef SPLITCENSUS_VERIFY_HPP
#define SPLITCENSUS_VERIFY_HPP

// Exhaustive verification sweeps. Each suite walks an input space, counts
// the checks it performed, and counts violations (always expected to be 0).

#include <vector>

#include "splitcensus/census.hpp"

namespace splitcensus {

struct SweepResult {
    u64 checked = 0;
    u64 violations = 0;
};

/// Every root of every lacunary polynomial (all patterns with t_k < p, all
/// coefficient vectors with a_0 = 1, the rest in F_p^*) has multiplicity at
/// most k. Exhaustive at the given p for each k in [1, k_max].
SweepResult verify_multiplicity_bound(const FieldContext& ctx, unsigned k_max, unsigned jobs = 1);

/// Determinant of the derivative-system matrix equals the pairwise exponent
/// difference product, exactly, for all tuples 0 < t_1 < ... < t_k <= t_max.
SweepResult verify_determinant_identity(unsigned k_max, u64 t_max);

/// gamma(G) <= floor(n/2) over ALL labeled graphs with n_min <= n <= n_max
/// vertices and minimum degree >= 1. `checked` counts graphs with delta >= 1.
SweepResult verify_ore_bound(int n_min, int n_max, unsigned jobs = 1);

/// Building the pattern graph at threshold D = gcd_parameter(pattern) always
/// leaves no isolated vertex. Exhaustive over patterns with t_k < p, k <= k_max.
SweepResult verify_min_degree_at_gcd_parameter(const FieldContext& ctx, unsigned k_max);

/// The radical + X^p splitting test agrees with the brute multiplicity-sum
/// oracle (total multiplicity over F_p^* equals t_k; x = 0 is never a root).
/// Exhaustive over the same space as verify_multiplicity_bound.
SweepResult verify_split_test_exhaustive(const FieldContext& ctx, unsigned k_max,
                                         unsigned jobs = 1);

/// Same agreement on `count` pseudo-random polynomials drawn from the given
/// primes (fixed seed; deterministic).
SweepResult verify_split_test_random(const std::vector<u64>& primes, unsigned k_max, u64 count,
                                     u64 seed);

}  // namespace splitcensus

#endif
