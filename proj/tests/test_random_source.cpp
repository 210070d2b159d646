#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mixtime/analysis/stats.hpp"
#include "mixtime/chains/random_source.hpp"

using namespace mixtime;

TEST_CASE("same seed gives the same stream") {
    RandomSource a(42), b(42);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds give different streams") {
    RandomSource a(1), b(2);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        if (a.next_u64() == b.next_u64()) ++same;
    REQUIRE(same == 0);
}

TEST_CASE("below stays in range and covers it") {
    RandomSource rng(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        auto x = rng.below(5);
        REQUIRE(x < 5);
        seen.insert(x);
    }
    REQUIRE(seen.size() == 5);
}

TEST_CASE("unit lies in the half-open interval") {
    RandomSource rng(9);
    for (int i = 0; i < 2000; ++i) {
        double u = rng.unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("coin shows both faces") {
    RandomSource rng(11);
    int heads = 0;
    for (int i = 0; i < 400; ++i) heads += rng.coin();
    REQUIRE(heads > 100);
    REQUIRE(heads < 300);
}

TEST_CASE("children are reproducible and mutually distinct") {
    RandomSource root(123);
    auto c1 = root.child(1);
    auto c1_again = root.child(1);
    auto c2 = root.child(2);
    auto named = root.child("walker");
    auto named_again = root.child("walker");
    REQUIRE(c1.next_u64() == c1_again.next_u64());
    REQUIRE(named.next_u64() == named_again.next_u64());
    RandomSource d1 = root.child(1), d2 = c2;
    int same = 0;
    for (int i = 0; i < 64; ++i)
        if (d1.next_u64() == d2.next_u64()) ++same;
    REQUIRE(same == 0);
}

TEST_CASE("child derivation leaves the parent untouched") {
    RandomSource a(5), b(5);
    (void)a.child(77);
    (void)a.child("side");
    REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("below is close to uniform") {
    RandomSource rng(2024);
    std::vector<long> observed(8, 0);
    for (int i = 0; i < 80000; ++i) ++observed[rng.below(8)];
    std::vector<long> expected(8, 1);
    auto t = chi_square_counts(observed, expected, 8);
    REQUIRE(t.dof == 7);
    REQUIRE(t.pvalue > 1e-3);
}
