#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "splitcensus/census.hpp"

using namespace splitcensus;

namespace {

DensePoly witness_dense(const FieldContext& ctx, const std::vector<u64>& exps,
                        const std::vector<u64>& coeffs) {
    std::vector<u64> c(exps.back() + 1, 0);
    c[0] = coeffs[0];
    for (std::size_t i = 0; i < exps.size(); ++i) c[exps[i]] = coeffs[i + 1];
    return DensePoly(ctx, std::move(c));
}

}  // namespace

TEST_CASE("pattern_splittable examples") {
    const FieldContext c7 = make_context(7);

    const SplitWitness w13 = pattern_splittable(ExponentPattern(c7, {1, 3}));
    CHECK(w13.splittable);
    CHECK(w13.coeffs == std::vector<u64>{1, 1, 4});  // lexicographically first witness

    const SplitWitness w3 = pattern_splittable(ExponentPattern(c7, {3}));
    CHECK(w3.splittable);  // 3 | 6
    CHECK(w3.coeffs == std::vector<u64>{1, 1});

    const SplitWitness w4 = pattern_splittable(ExponentPattern(c7, {4}));
    CHECK_FALSE(w4.splittable);  // 4 does not divide 6
    CHECK(w4.coeffs.empty());
}

TEST_CASE("witnesses split and realize their exact pattern") {
    const FieldContext c13 = make_context(13);
    for (unsigned k = 1; k <= 3; ++k) {
        for (u64 t = k; t < 13; ++t) {
            const CensusRecord rec = count_split_patterns(c13, k, t);
            for (const PatternResult& r : rec.per_pattern) {
                if (!r.splittable) continue;
                const DensePoly f = witness_dense(c13, r.exps, r.witness);
                CHECK(fully_splits(f));
                unsigned nonzero = 0;
                for (const u64 c : f.coeffs()) nonzero += (c != 0);
                CHECK(nonzero == k + 1);
                for (const u64 e : r.exps) CHECK(f.coeff(e) != 0);
                CHECK(f.coeff(0) != 0);
            }
        }
    }
}

TEST_CASE("count_split_patterns examples") {
    const FieldContext c7 = make_context(7);
    CHECK(count_split_patterns(c7, 1, 3).n_split == 1);
    CHECK(count_split_patterns(c7, 1, 4).n_split == 0);

    const CensusRecord rec = count_split_patterns(c7, 2, 3);
    CHECK(rec.n_split == 2);
    REQUIRE(rec.per_pattern.size() == 2);
    CHECK(rec.per_pattern[0].exps == std::vector<u64>{1, 3});
    CHECK(rec.per_pattern[0].witness == std::vector<u64>{1, 1, 4});
    CHECK(rec.per_pattern[0].d == 2);
    CHECK(rec.per_pattern[1].exps == std::vector<u64>{2, 3});
    CHECK(rec.per_pattern[1].witness == std::vector<u64>{1, 1, 2});
    CHECK(rec.trivial_bound == 2);
    CHECK(rec.bound_leading == doctest::Approx(3.0));  // t^{k-1} at k = 2
    CHECK_FALSE(rec.nontrivial);
}

TEST_CASE("rootside oracle examples") {
    const FieldContext c7 = make_context(7);
    CHECK(count_split_patterns_rootside(c7, 2, 3) == 2);
    CHECK(count_split_patterns_rootside(c7, 1, 3) == 1);
    CHECK(count_split_patterns_rootside(c7, 1, 4) == 0);

    const FieldContext c5 = make_context(5);
    CHECK(count_split_patterns(c5, 3, 4).n_split == 3);
    CHECK(count_split_patterns_rootside(c5, 3, 4) == 3);
}

TEST_CASE("strict and loose pattern conventions can differ") {
    const FieldContext c7 = make_context(7);
    CensusOptions strict;
    CensusOptions loose;
    loose.strict_pattern = false;

    CHECK(count_split_patterns(c7, 2, 6, strict).n_split == 1);
    CHECK(count_split_patterns(c7, 2, 6, loose).n_split == 5);  // 1 + 6 X^6 splits everywhere

    // A loose witness never loses the endpoints.
    const CensusRecord rec = count_split_patterns(c7, 2, 6, loose);
    for (const PatternResult& r : rec.per_pattern) {
        if (!r.splittable) continue;
        CHECK(r.witness.front() != 0);
        CHECK(r.witness.back() != 0);
    }

    // The loose count dominates the strict one across a sweep.
    for (u64 t = 2; t < 7; ++t) {
        CHECK(count_split_patterns(c7, 2, t, loose).n_split >=
              count_split_patterns(c7, 2, t, strict).n_split);
    }
}

TEST_CASE("budgets are hard errors") {
    const FieldContext c13 = make_context(13);
    CensusOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(count_split_patterns(c13, 3, 12, opts), BudgetExceededError);
    CHECK_THROWS_AS(count_split_patterns_rootside(c13, 3, 12, 10), BudgetExceededError);
}

TEST_CASE("oracle equivalence on a random selection of cells") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 6; ++i) {
        const u64 p = std::vector<u64>{5, 7, 11}[rng() % 3];
        const FieldContext ctx = make_context(p);
        const unsigned k = 1 + rng() % 3;
        const u64 t = 1 + rng() % (p - 1);
        CHECK(count_split_patterns(ctx, k, t).n_split == count_split_patterns_rootside(ctx, k, t));
    }
}

TEST_CASE("scaling orbit soundness: transformed witnesses still split") {
    const FieldContext c7 = make_context(7);
    std::mt19937_64 rng(47);
    for (u64 t = 2; t < 7; ++t) {
        const CensusRecord rec = count_split_patterns(c7, 2, t);
        for (const PatternResult& r : rec.per_pattern) {
            if (!r.splittable) continue;
            for (int trial = 0; trial < 3; ++trial) {
                const u64 c = 1 + rng() % 6;
                std::vector<u64> scaled = r.witness;
                for (std::size_t i = 0; i < r.exps.size(); ++i) {
                    scaled[i + 1] = mod_mul(scaled[i + 1], mod_pow(c, r.exps[i], 7), 7);
                }
                CHECK(fully_splits(witness_dense(c7, r.exps, scaled)));
            }
        }
    }
}

TEST_CASE("census is deterministic across job counts") {
    const FieldContext c13 = make_context(13);
    CensusOptions serial;
    CensusOptions threaded;
    threaded.jobs = 3;
    const CensusRecord a = count_split_patterns(c13, 3, 12, serial);
    const CensusRecord b = count_split_patterns(c13, 3, 12, threaded);
    REQUIRE(a.per_pattern.size() == b.per_pattern.size());
    CHECK(a.n_split == b.n_split);
    for (std::size_t i = 0; i < a.per_pattern.size(); ++i) {
        CHECK(a.per_pattern[i].exps == b.per_pattern[i].exps);
        CHECK(a.per_pattern[i].splittable == b.per_pattern[i].splittable);
        CHECK(a.per_pattern[i].d == b.per_pattern[i].d);
        CHECK(a.per_pattern[i].witness == b.per_pattern[i].witness);
        CHECK(a.per_pattern[i].witness_roots == b.per_pattern[i].witness_roots);
    }
}

TEST_CASE("pattern_count_bound exponents") {
    const auto k2 = pattern_count_bound(7, 2, 3);
    CHECK(k2.leading == doctest::Approx(3.0));  // t
    CHECK(k2.simplified_exponent == 2);

    const auto k3 = pattern_count_bound(7, 3, 5);
    CHECK(k3.leading == doctest::Approx(25.0));  // t^2
    CHECK_FALSE(k3.nontrivial);

    const auto k4 = pattern_count_bound(11, 4, 7);
    CHECK(k4.leading == doctest::Approx(std::pow(11.0, 3) / 7.0));  // t^{-1} p^3
    CHECK(k4.nontrivial);  // k > 3 and 7 > 11^{3/4} ~ 6.04
    CHECK(k4.simplified_exponent == 3);

    const auto small_t = pattern_count_bound(11, 4, 6);
    CHECK_FALSE(small_t.nontrivial);  // 6 < 11^{3/4} is false... 6 < 6.04
    CHECK(pattern_count_bound(31, 1, 10).trivial_bound == 1);
}

TEST_CASE("graph_class_report case bounds at k = 4") {
    const FieldContext c17 = make_context(17);
    const GraphClassReport rep = graph_class_report(c17, 4, 16, 2);
    CHECK(rep.bound_neither == doctest::Approx(2048.0));  // t^2 (t/D)
    CHECK(rep.bound_both == doctest::Approx(512.0));      // (t/D)^3
    CHECK(rep.bound_one == doctest::Approx(1024.0));      // t (t/D)^2
    CHECK(rep.total_patterns == binomial_saturating(15, 3));

    u64 sum = 0;
    for (const GraphClassEntry& e : rep.entries) {
        sum += e.count;
        if (e.excluded) {
            CHECK(e.min_deg == 0);
            continue;
        }
        CHECK(e.dominating.size() == 2);  // floor((k+1)/2)
        const double expected = e.endpoint_case == EndpointCase::both    ? rep.bound_both
                                : e.endpoint_case == EndpointCase::one   ? rep.bound_one
                                                                         : rep.bound_neither;
        CHECK(e.bound_value == expected);
    }
    CHECK(sum == rep.total_patterns);
}

TEST_CASE("graph_class_report collapses all cases at t = D") {
    const FieldContext c17 = make_context(17);
    const GraphClassReport rep = graph_class_report(c17, 4, 16, 16);
    CHECK(rep.bound_both == doctest::Approx(4096.0));  // t^{k-1}
    CHECK(rep.bound_one == doctest::Approx(4096.0));
    CHECK(rep.bound_neither == doctest::Approx(4096.0));
}

TEST_CASE("graph_class_report tags classes with isolated vertices") {
    const FieldContext c7 = make_context(7);
    const GraphClassReport rep = graph_class_report(c7, 2, 3, 7);  // empty graphs only
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].excluded);
    CHECK(rep.entries[0].min_deg == 0);
    CHECK(rep.entries[0].count == 2);
}

TEST_CASE("endpoint case names") {
    CHECK(std::string(endpoint_case_name(EndpointCase::both)) == "both");
    CHECK(std::string(endpoint_case_name(EndpointCase::one)) == "one");
    CHECK(std::string(endpoint_case_name(EndpointCase::neither)) == "neither");
}
