#include "splitcensus/zerostats.hpp"

#include <cmath>
#include <string>

namespace splitcensus {

u64 gcd_parameter(const ExponentPattern& pattern) {
    const std::vector<u64> ext = pattern.extended();
    const u64 pm1 = pattern.ctx().p - 1;
    u64 best = ~u64{0};
    for (std::size_t i = 0; i < ext.size(); ++i) {
        u64 row_max = 0;
        for (std::size_t j = 0; j < ext.size(); ++j) {
            if (j == i) continue;
            const u64 diff = ext[j] > ext[i] ? ext[j] - ext[i] : ext[i] - ext[j];
            row_max = std::max(row_max, gcd(diff, pm1));
        }
        best = std::min(best, row_max);
    }
    if (pm1 % best != 0) {
        // Each gcd divides p-1, so every row maximum and their minimum do too.
        throw InvariantViolationError("gcd_parameter: result does not divide p-1");
    }
    return best;
}

ZeroBoundRecord zero_bound_record(u64 d, u64 q, unsigned k, u64 p) {
    ZeroBoundRecord rec;
    rec.d = d;
    rec.q = q;
    const double kd = k;
    const double pd = static_cast<double>(p);
    rec.leading = 2.0 * std::pow(pd, 1.0 - 1.0 / kd) * std::pow(static_cast<double>(d), 1.0 / kd);
    rec.secondary = std::pow(pd, 1.0 - 2.0 / kd) * std::pow(static_cast<double>(d), 2.0 / kd);
    rec.ratio = static_cast<double>(q) / rec.leading;
    return rec;
}

ZeroBoundRecord zero_bound_report(const LacunaryPoly& f) {
    return zero_bound_record(gcd_parameter(f.pattern()),
                             count_roots_brute(f).distinct_roots, f.pattern().k(),
                             f.ctx().p);
}

GcdFloorRecord gcd_floor_report(const ExponentPattern& pattern, bool observed_split) {
    GcdFloorRecord rec;
    rec.d = gcd_parameter(pattern);
    rec.t = pattern.top();
    if (rec.d > rec.t) {
        // Every pairwise exponent difference is at most t_k.
        throw InvariantViolationError("gcd_floor_report: gcd parameter " + std::to_string(rec.d) +
                                      " exceeds t = " + std::to_string(rec.t));
    }
    const double k = pattern.k();
    const double p = static_cast<double>(pattern.ctx().p);
    rec.rhs = std::pow(static_cast<double>(rec.t), k) * std::pow(p, 1.0 - k);
    rec.applicable = observed_split;
    if (observed_split) rec.ratio = static_cast<double>(rec.d) / rec.rhs;
    return rec;
}

}  // namespace splitcensus
