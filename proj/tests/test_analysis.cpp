#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mixtime/analysis/bipartite_bounds.hpp"
#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/available_colour_oracle.hpp"
#include "mixtime/analysis/mixing_bounds.hpp"
#include "mixtime/analysis/stats.hpp"
#include "mixtime/analysis/tricol_weights.hpp"

using namespace mixtime;

TEST_CASE("edge-size threshold function at small sizes") {
    REQUIRE(f_threshold(2) == Rational(2));
    REQUIRE(f_threshold(3) == Rational(5, 2));
    REQUIRE(f_threshold(4) == Rational(34, 11));
    REQUIRE(f_threshold(5) == Rational(49, 13));
    // Boundary pattern: for sizes >= 5 the first size clearing degree d is d+2.
    for (int d = 4; d <= 12; ++d) {
        REQUIRE(f_threshold(d + 1) <= d);
        REQUIRE(f_threshold(d + 2) > d);
    }
    REQUIRE(f_threshold(4) > 3);  // the lone small-size extra
}

TEST_CASE("occupancy weight systems match hand-computed values") {
    auto w = indset_weights(4, 2);
    REQUIRE(w.gamma == Rational(12, 17));
    REQUIRE(w.c == std::vector<Rational>{Rational(9, 17), Rational(11, 17), Rational(1)});
    REQUIRE_FALSE(w.no_contraction);

    auto w53 = indset_weights(5, 3);
    REQUIRE(w53.gamma == Rational(20, 49));

    auto w21 = indset_weights(2, 1);
    REQUIRE(w21.gamma == Rational(1));

    // f(2) = 2 = max degree: the system exists but has no slack.
    auto w22 = indset_weights(2, 2);
    REQUIRE(w22.gamma == 0);
    REQUIRE(w22.no_contraction);
}

TEST_CASE("occupancy recurrence residuals vanish across a sweep") {
    for (int m = 2; m <= 10; ++m)
        for (int d = 1; f_threshold(m) > d; ++d) {
            auto rep = verify_indset_recurrence(indset_weights(m, d));
            INFO("m=" << m << " d=" << d);
            REQUIRE(rep.ok());
            for (const auto& r : rep.residuals) REQUIRE(r == 0);
        }
}

TEST_CASE("colouring weight systems match hand-computed values") {
    auto w = tricol_weights(4, 2);
    REQUIRE(w.gamma == Rational(4, 7));
    REQUIRE(w.c2 == Rational(5, 7));
    REQUIRE(w.c3 == Rational(3, 7));
    REQUIRE(w.c3 == w.c4);
    REQUIRE(w.c1 == 1);
    REQUIRE(w.c0() == 3);

    auto w41 = tricol_weights(4, 1);
    REQUIRE(w41.gamma == Rational(5, 2));
    REQUIRE(w41.c2 == Rational(7, 8));
    REQUIRE(w41.c3 == Rational(3, 4));

    REQUIRE(tricol_min_q(2) == 4);
    REQUIRE(tricol_min_q(3) == 6);
    REQUIRE(tricol_min_q(4) == 7);
}

TEST_CASE("colouring residuals vanish at the first certified palette") {
    for (int d = 1; d <= 12; ++d) {
        auto w = tricol_weights(tricol_min_q(d), d);
        INFO("d=" << d);
        REQUIRE(w.gamma >= 0);
        auto rep = verify_tricol_system(w);
        REQUIRE(rep.ok());
        for (const auto& r : rep.residuals) REQUIRE(r == 0);
    }
    // One palette short of the boundary must not certify contraction.
    auto short_w = tricol_weights(tricol_min_q(6) - 1, 6);
    REQUIRE((short_w.no_contraction || short_w.gamma < 0));
}

TEST_CASE("available-colour bounds at the first certified pair") {
    auto b = bip_bounds(17, 9);
    REQUIRE(to_double(b.B) == Catch::Approx(0.9973575764).epsilon(1e-9));
    REQUIRE(to_double(b.contraction_factor) ==
            Catch::Approx(to_double(b.B) * (to_double(b.B) + 1) / 2).epsilon(1e-12));
    REQUIRE(b.contracts());
    REQUIRE_THROWS_AS(bip_bounds(10, 9), std::invalid_argument);  // q <= max_deg + 1
}

TEST_CASE("threshold palette scan matches frozen values") {
    REQUIRE(min_q_for_contraction(9) == 17);
    REQUIRE(min_q_for_contraction(10) == 19);
    REQUIRE(min_q_for_contraction(22) == 40);
    REQUIRE(min_q_for_contraction(50) == 90);
    // Both readings of the change-vertex reciprocal agree on these rows.
    REQUIRE(min_q_for_contraction(9, 50, AlphaPrimeVVariant::symmetric) == 17);
    REQUIRE(min_q_for_contraction(22, 50, AlphaPrimeVVariant::symmetric) == 40);
    // Stable computed thresholds where the scan exceeds the published entries.
    REQUIRE(min_q_for_contraction(34) == 62);
    REQUIRE(min_q_for_contraction(38) == 69);
    REQUIRE(min_q_for_contraction(39) == 71);
    REQUIRE(min_q_for_contraction(42) == 76);
    REQUIRE(min_q_for_contraction(43) == 78);
    REQUIRE(min_q_for_contraction(47) == 85);
    // Insensitive to working precision.
    REQUIRE(min_q_for_contraction(34, 100) == 62);
    REQUIRE(min_q_for_contraction(47, 100) == 85);
}

TEST_CASE("asymptotic palette-per-degree constant") {
    PrecisionGuard guard(40);
    Real beta = solve_beta(40);
    REQUIRE(to_double(beta) == Catch::Approx(1.7632228343518).epsilon(1e-10));
    Real x = 1 / beta;
    Real residual = x * exp(x) - 1;
    REQUIRE(to_double(abs(residual)) < 1e-30);
}

TEST_CASE("exact available-colour oracle agrees with closed forms") {
    // Degree 1: a single pinned neighbour leaves q-1 colours surely, which is
    // exactly where both bounds are tight.
    for (int q = 3; q <= 6; ++q) {
        auto b = bip_bounds(q, 1);
        std::vector<int> all_but_last;
        for (int c = 1; c < q; ++c) all_but_last.push_back(c);
        auto res = available_colour_oracle(q, 1, {all_but_last}, 1);
        REQUIRE(res.expect_available == q - 1);
        REQUIRE(res.expect_reciprocal == Rational(1, q - 1));
        REQUIRE(to_double(res.expect_available) == Catch::Approx(to_double(b.alpha)).epsilon(1e-12));
        REQUIRE(to_double(res.expect_reciprocal) ==
                Catch::Approx(to_double(b.alpha_prime)).epsilon(1e-12));
    }
    // Two neighbours, second list {1, 4, 3} with the first pinned to 1: the
    // second draw collides once in three.
    auto res = available_colour_oracle(5, 2, {{1, 2, 3}, {1, 4, 3}}, 1);
    REQUIRE(res.tuples == 3);
    REQUIRE(res.expect_available == Rational(10, 3));
    REQUIRE(res.expect_reciprocal == Rational(11, 36));
}

TEST_CASE("oracle rejects inputs outside the hypothesis") {
    REQUIRE_THROWS_AS(available_colour_oracle(4, 2, {{1, 2}}, 1), std::invalid_argument);  // set count
    REQUIRE_THROWS_AS(available_colour_oracle(4, 2, {{1}, {2, 3}}, 1), std::invalid_argument);  // too small
    REQUIRE_THROWS_AS(available_colour_oracle(4, 2, {{1, 2}, {2, 3}}, 3), std::invalid_argument);  // q1
    REQUIRE_THROWS_AS(available_colour_oracle(4, 2, {{1, 2}, {3, 4}}, 1),
                      std::invalid_argument);  // no blocked colour
    REQUIRE_THROWS_AS(available_colour_oracle(4, 2, {{1, 5}, {2, 3}}, 1),
                      std::invalid_argument);  // colour out of range
}

TEST_CASE("chi-square helper matches a known quantile") {
    REQUIRE(chi_square_pvalue(3.841, 1) == Catch::Approx(0.05).margin(2e-4));
    REQUIRE(chi_square_pvalue(0.0, 4) == 1.0);
    REQUIRE_THROWS_AS(chi_square_pvalue(1.0, 0), std::invalid_argument);

    std::vector<long> obs{250, 250, 250, 250};
    auto t = chi_square_counts(obs, {1, 1, 1, 1}, 4);
    REQUIRE(t.statistic == 0.0);
    REQUIRE(t.dof == 3);
    REQUIRE_THROWS_AS(chi_square_counts({5, 0}, {1, 0}, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(chi_square_counts({5}, {1, 1}, 2), std::invalid_argument);
}

TEST_CASE("stopping-time mixing bounds behave sensibly") {
    MixingBoundInputs in;
    in.k = 10;
    in.p = 0.9;
    in.alpha = 0.5;
    in.diameter = 100;
    in.eps = 0.01;
    double one = mixing_bound_onestop(in);
    REQUIRE(one == Catch::Approx(10.0 / (0.9 * 0.5) * std::log(std::exp(1.0) * 100 / (0.01 * 0.5))));
    double two = mixing_bound_twophase(in);
    REQUIRE(two > 0);
    in.gamma_general = 0.25;
    REQUIRE(mixing_bound_general(in) ==
            Catch::Approx(10.0 * 0.75 / (0.9 * 0.5) * std::log(100 / 0.01)));
    in.alpha = 1.0;
    REQUIRE_THROWS_AS(mixing_bound_onestop(in), std::invalid_argument);
}
