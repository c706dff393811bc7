// Acceptance suite: one pass/fail line per criterion. Exhaustive sweeps and
// oracle cross-checks at desk scale; diagnostic ratios are reported, the
// asymptotic constants behind them are not assertable at any finite size.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "splitcensus/runner.hpp"

using namespace splitcensus;

namespace {

unsigned worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr u64 kSweepPrimes[] = {5, 7, 11, 13};
constexpr unsigned kSweepKMax = 3;

// Census sweep shared by criteria 5, 8 and 9: every (p, k, t) cell with
// p in {5,7,11,13}, k <= 3, t < p.
const std::vector<CensusRecord>& census_sweep() {
    static const std::vector<CensusRecord> sweep = [] {
        std::vector<CensusRecord> records;
        CensusOptions opts;
        opts.jobs = worker_count();
        for (const u64 p : kSweepPrimes) {
            const FieldContext ctx = make_context(p);
            for (unsigned k = 1; k <= kSweepKMax; ++k) {
                for (u64 t = 1; t < p; ++t) {
                    records.push_back(count_split_patterns(ctx, k, t, opts));
                }
            }
        }
        return records;
    }();
    return sweep;
}

Outcome multiplicity_criterion() {
    u64 checked = 0, violations = 0;
    for (const u64 p : kSweepPrimes) {
        const FieldContext ctx = make_context(p);
        const SweepResult r = verify_multiplicity_bound(ctx, kSweepKMax, worker_count());
        checked += r.checked;
        violations += r.violations;
    }
    std::ostringstream d;
    d << "polynomials=" << checked << " multiplicity-violations=" << violations;
    return {violations == 0 && checked > 0, d.str()};
}

Outcome determinant_criterion() {
    const SweepResult r = verify_determinant_identity(4, 12);
    u64 expected = 0;
    for (unsigned k = 1; k <= 4; ++k) expected += binomial_saturating(12, k);
    std::ostringstream d;
    d << "tuples=" << r.checked << " (expected " << expected << ") mismatches=" << r.violations;
    return {r.violations == 0 && r.checked == expected, d.str()};
}

Outcome ore_criterion() {
    const SweepResult r = verify_ore_bound(2, 7, worker_count());
    u64 expected = 0;
    for (int n = 2; n <= 7; ++n) expected += testing::graphs_without_isolated_vertices(n);
    std::ostringstream d;
    d << "graphs=" << r.checked << " (expected " << expected << ") violations=" << r.violations;
    return {r.violations == 0 && r.checked == expected, d.str()};
}

Outcome min_degree_criterion() {
    u64 checked = 0, violations = 0, expected = 0;
    for (const u64 p : {7ull, 11ull, 13ull}) {
        const FieldContext ctx = make_context(p);
        const SweepResult r = verify_min_degree_at_gcd_parameter(ctx, 3);
        checked += r.checked;
        violations += r.violations;
        for (unsigned k = 1; k <= 3; ++k) expected += binomial_saturating(p - 1, k);
    }
    std::ostringstream d;
    d << "patterns=" << checked << " (expected " << expected << ") violations=" << violations;
    return {violations == 0 && checked == expected, d.str()};
}

Outcome census_oracle_criterion() {
    u64 cells = 0, mismatches = 0;
    std::size_t idx = 0;
    const auto& sweep = census_sweep();
    for (const u64 p : kSweepPrimes) {
        const FieldContext ctx = make_context(p);
        for (unsigned k = 1; k <= kSweepKMax; ++k) {
            for (u64 t = 1; t < p; ++t, ++idx) {
                const u64 direct = sweep[idx].n_split;
                const u64 rootside = count_split_patterns_rootside(ctx, k, t);
                ++cells;
                if (direct != rootside) ++mismatches;
            }
        }
    }
    std::ostringstream d;
    d << "cells=" << cells << " mismatches=" << mismatches;
    return {mismatches == 0 && cells > 0, d.str()};
}

Outcome closed_form_criterion() {
    u64 cells = 0, mismatches = 0;
    for (u64 p = 3; p <= 31; ++p) {
        if (!is_prime(p)) continue;
        const FieldContext ctx = make_context(p);
        for (u64 t = 1; t < p; ++t) {
            const u64 expected = (p - 1) % t == 0 ? 1 : 0;
            ++cells;
            if (count_split_patterns(ctx, 1, t).n_split != expected) ++mismatches;
        }
    }
    std::ostringstream d;
    d << "cells=" << cells << " mismatches=" << mismatches;
    return {mismatches == 0, d.str()};
}

Outcome split_test_criterion() {
    u64 checked = 0, violations = 0;
    for (const u64 p : kSweepPrimes) {
        const FieldContext ctx = make_context(p);
        const SweepResult r = verify_split_test_exhaustive(ctx, kSweepKMax, worker_count());
        checked += r.checked;
        violations += r.violations;
    }
    const std::vector<u64> primes = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                     53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
    const SweepResult random = verify_split_test_random(primes, 4, 10'000, 0x5eed5eedULL);
    std::ostringstream d;
    d << "exhaustive=" << checked << " random=" << random.checked
      << " mismatches=" << (violations + random.violations);
    return {violations == 0 && random.violations == 0 && random.checked == 10'000, d.str()};
}

Outcome root_floor_criterion() {
    u64 witnesses = 0, violations = 0;
    for (const CensusRecord& rec : census_sweep()) {
        for (const PatternResult& r : rec.per_pattern) {
            if (!r.splittable) continue;
            ++witnesses;
            const u64 floor_q = (rec.t + rec.k - 1) / rec.k;  // ceil(t/k)
            if (r.witness_roots < floor_q) ++violations;
        }
    }
    std::ostringstream d;
    d << "witnesses=" << witnesses << " violations=" << violations;
    return {violations == 0 && witnesses > 0, d.str()};
}

Outcome diagnostics_criterion() {
    double max_zero_ratio = 0.0, max_floor_ratio = 0.0, max_slack = 0.0;
    u64 rows = 0;
    bool finite = true;
    for (const CensusRecord& rec : census_sweep()) {
        for (const PatternResult& r : rec.per_pattern) {
            if (!r.splittable) continue;
            const ZeroBoundRecord z = zero_bound_record(r.d, r.witness_roots, rec.k, rec.p);
            const FieldContext ctx = make_context(rec.p);
            const GcdFloorRecord fl = gcd_floor_report(ExponentPattern(ctx, r.exps), true);
            finite = finite && std::isfinite(z.ratio) && std::isfinite(fl.ratio);
            max_zero_ratio = std::max(max_zero_ratio, z.ratio);
            max_floor_ratio = std::max(max_floor_ratio, fl.ratio);
            ++rows;
        }
        // The subpolynomial factor in the count bound is not reproducible at
        // any finite scale; the measured slack is recorded, never asserted.
        const double slack = static_cast<double>(rec.n_split) / rec.bound_leading;
        finite = finite && std::isfinite(slack);
        max_slack = std::max(max_slack, slack);
        if (static_cast<double>(rec.n_split) > rec.bound_leading * slack * (1.0 + 1e-12)) {
            finite = false;  // N <= bound * slack must hold by construction
        }
    }
    std::ostringstream d;
    d << "rows=" << rows << " max_zero_ratio=" << max_zero_ratio
      << " max_floor_ratio=" << max_floor_ratio << " max_count_slack=" << max_slack;
    return {finite && rows > 0, d.str()};
}

Outcome determinism_criterion() {
    RunConfig cfg;
    cfg.command = Command::census;
    cfg.p = 13;
    cfg.k = 3;
    cfg.t_spec = "12";
    std::vector<std::string> outputs;
    for (const unsigned jobs : {1u, 2u, 8u}) {
        cfg.jobs = jobs;
        outputs.push_back(render_output(cfg).bytes);
    }
    const bool equal = outputs[0] == outputs[1] && outputs[1] == outputs[2];
    std::ostringstream d;
    d << "bytes=" << outputs[0].size() << " runs=3 "
      << (equal ? "byte-identical" : "MISMATCH");
    return {equal && !outputs[0].empty(), d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "root multiplicity bounded by k (exhaustive)", multiplicity_criterion},
        {2, "derivative-matrix determinant identity (exact)", determinant_criterion},
        {3, "domination number at most n/2 (all graphs, 2..7 vertices)", ore_criterion},
        {4, "positive min degree at the pattern's gcd parameter", min_degree_criterion},
        {5, "census equals the root-multiset oracle", census_oracle_criterion},
        {6, "binomial closed form matches enumeration (p <= 31)", closed_form_criterion},
        {7, "split test equals the multiplicity-sum oracle", split_test_criterion},
        {8, "split witnesses have at least ceil(t/k) roots", root_floor_criterion},
        {9, "bound diagnostics tabulated with finite ratios", diagnostics_criterion},
        {10, "census CSV byte-identical across 1/2/8 workers", determinism_criterion},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s - %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL",
                    c.id, c.name, outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("%d criteria FAILED\n", failures);
    }
    return failures;
}
