#ifndef SPLITCENSUS_ZEROSTATS_HPP
#define SPLITCENSUS_ZEROSTATS_HPP

// The gcd parameter D of an exponent pattern and the measured-versus-bound
// diagnostics built on it. The bound terms carry unknown implied constants,
// so everything real-valued here is reported, never asserted; the exact
// integer facts (divisibility, D <= t) are checked.

#include "splitcensus/lacunary.hpp"

namespace splitcensus {

/// D = min over i in {0..k} of max over j != i of gcd(|t_j - t_i|, p-1),
/// taken over the extended exponents (t_0 = 0 included). Always divides p-1.
u64 gcd_parameter(const ExponentPattern& pattern);

struct ZeroBoundRecord {
    u64 d = 0;               // gcd parameter of the pattern
    u64 q = 0;               // exact count of distinct roots in F_p^*
    double leading = 0.0;    // 2 * p^(1-1/k) * D^(1/k)
    double secondary = 0.0;  // p^(1-2/k) * D^(2/k)
    double ratio = 0.0;      // q / leading
};

/// Assembles a record from an already-known gcd parameter and root count.
ZeroBoundRecord zero_bound_record(u64 d, u64 q, unsigned k, u64 p);

/// Exact root count of f against the zero-bound terms for its pattern.
/// Diagnostic only: the bound's error term has an unknown constant.
ZeroBoundRecord zero_bound_report(const LacunaryPoly& f);

struct GcdFloorRecord {
    bool applicable = false;  // only split patterns are in the floor regime
    u64 d = 0;
    u64 t = 0;          // t_k
    double rhs = 0.0;   // t^k * p^(1-k)
    double ratio = 0.0; // d / rhs, when applicable
};

/// Measured ratio of D against its asymptotic floor t^k p^(1-k) for patterns
/// known to admit a split witness. Checks D <= t exactly (every pairwise
/// exponent difference is at most t, hence so is every gcd).
GcdFloorRecord gcd_floor_report(const ExponentPattern& pattern, bool observed_split);

}  // namespace splitcensus

#endif
