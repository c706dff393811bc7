#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "splitcensus/zerostats.hpp"

using namespace splitcensus;

TEST_CASE("gcd_parameter examples") {
    const FieldContext c7 = make_context(7);
    CHECK(gcd_parameter(ExponentPattern(c7, {2, 3})) == 2);  // row maxima 3, 2, 3
    CHECK(gcd_parameter(ExponentPattern(c7, {1, 3})) == 2);
    CHECK(gcd_parameter(ExponentPattern(c7, {3})) == 3);  // k = 1: gcd(t, p-1)
    CHECK(gcd_parameter(ExponentPattern(c7, {4})) == 2);
    // all pairwise differences coprime to p-1
    for (const u64 p : {7ull, 11ull, 13ull}) {
        const FieldContext ctx = make_context(p);
        CHECK(gcd_parameter(ExponentPattern(ctx, {1})) == 1);
    }
}

TEST_CASE("gcd_parameter divides p-1, exhaustively for small fields") {
    for (const u64 p : {7ull, 11ull, 13ull}) {
        const FieldContext ctx = make_context(p);
        for (unsigned k = 1; k <= 3; ++k) {
            for (u64 t = k; t < p; ++t) {
                for_each_pattern(k, t, [&](const std::vector<u64>& exps) {
                    const u64 d = gcd_parameter(ExponentPattern(ctx, exps));
                    CHECK((p - 1) % d == 0);
                    CHECK(d >= 1);
                });
            }
        }
    }
}

TEST_CASE("gcd_parameter is invariant under exponent reflection") {
    std::mt19937_64 rng(31);
    const FieldContext ctx = make_context(101);
    for (int i = 0; i < 300; ++i) {
        const unsigned k = 1 + rng() % 4;
        std::vector<u64> exps;
        while (exps.size() < k) {
            const u64 e = 1 + rng() % 100;
            if (std::find(exps.begin(), exps.end(), e) == exps.end()) exps.push_back(e);
        }
        std::sort(exps.begin(), exps.end());
        // t_i -> t_k - t_{k-i}, preserving the multiset of differences
        const u64 top = exps.back();
        std::vector<u64> reflected;
        for (std::size_t i = exps.size() - 1; i-- > 0;) reflected.push_back(top - exps[i]);
        reflected.push_back(top);
        CHECK(gcd_parameter(ExponentPattern(ctx, exps)) ==
              gcd_parameter(ExponentPattern(ctx, reflected)));
    }
}

TEST_CASE("zero_bound_report examples") {
    const FieldContext c7 = make_context(7);
    const auto cubic = zero_bound_report(
        LacunaryPoly(ExponentPattern(c7, {3}), {6, 1}));  // X^3 - 1
    CHECK(cubic.d == 3);
    CHECK(cubic.q == 3);
    CHECK(cubic.leading == doctest::Approx(6.0));
    CHECK(cubic.ratio == doctest::Approx(0.5));
    CHECK(cubic.secondary == doctest::Approx(9.0 / 7.0));  // p^{-1} D^2 at k = 1

    // X^{p-1} - 1: Q = p - 1 = D, leading = 2(p-1), ratio exactly 1/2
    const FieldContext c13 = make_context(13);
    const auto fermat = zero_bound_report(LacunaryPoly(ExponentPattern(c13, {12}), {12, 1}));
    CHECK(fermat.d == 12);
    CHECK(fermat.q == 12);
    CHECK(fermat.leading == doctest::Approx(24.0));
    CHECK(fermat.ratio == doctest::Approx(0.5));

    const auto mixed = zero_bound_report(
        LacunaryPoly(ExponentPattern(c7, {1, 3}), {1, 4, 1}));  // 1 + 4X + X^3
    CHECK(mixed.d == 2);
}

TEST_CASE("gcd_floor_report examples") {
    const FieldContext c7 = make_context(7);
    const auto split = gcd_floor_report(ExponentPattern(c7, {1, 3}), true);
    CHECK(split.applicable);
    CHECK(split.d == 2);
    CHECK(split.t == 3);
    CHECK(split.rhs == doctest::Approx(9.0 / 7.0));
    CHECK(split.ratio == doctest::Approx(14.0 / 9.0));

    const auto nonsplit = gcd_floor_report(ExponentPattern(c7, {1, 3}), false);
    CHECK_FALSE(nonsplit.applicable);

    // k = 1 with t | p-1: D = t and the floor ratio is exactly 1
    const auto boundary = gcd_floor_report(ExponentPattern(c7, {3}), true);
    CHECK(boundary.d == 3);
    CHECK(boundary.rhs == doctest::Approx(3.0));
    CHECK(boundary.ratio == doctest::Approx(1.0));
}

TEST_CASE("zero_bound_record assembles the diagnostic terms") {
    const auto rec = zero_bound_record(3, 3, 1, 7);
    CHECK(rec.leading == doctest::Approx(6.0));
    CHECK(rec.secondary == doctest::Approx(9.0 / 7.0));
    CHECK(rec.ratio == doctest::Approx(0.5));
}
