#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "mixtime/chains/glauber.hpp"
#include "mixtime/coupling/coupled_steps.hpp"
#include "mixtime/coupling/drift.hpp"
#include "mixtime/coupling/metrics.hpp"
#include "mixtime/coupling/pairs.hpp"
#include "mixtime/coupling/profiles.hpp"
#include "mixtime/coupling/stopping.hpp"
#include "mixtime/instances/generate.hpp"
#include "mixtime/instances/io.hpp"

using namespace mixtime;

static Hypergraph load_hg(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return parse_hypergraph(in);
}

TEST_CASE("edge profiles count occupied endpoints per incident edge") {
    auto h = load_hg("data/overlap.hg");
    OccupancyState s(8);
    s.insert(2);
    s.insert(5);
    auto p = edge_profile(h, s, 1);  // vertex 1 sits in edges {1,2,3,4} and {1,5,6,7}
    REQUIRE(p.counts.size() == 3);   // occupancy levels 0 .. m-2 elsewhere
    REQUIRE(p.counts[1] == 2);       // one occupied endpoint in each edge
    REQUIRE(p.counts[0] == 0);
}

TEST_CASE("change vertex identifies the single difference") {
    OccupancyState x(5), y(5);
    y.insert(3);
    REQUIRE(change_vertex(x, y) == 3);
    y.insert(4);
    REQUIRE_THROWS_AS(change_vertex(x, y), std::invalid_argument);
}

TEST_CASE("occupancy metric is a metric on sampled states") {
    auto h = load_hg("data/overlap.hg");
    auto wt = indset_weights(4, 2);
    RandomSource rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_indset_state(h, 40, rng);
        auto y = random_indset_state(h, 40, rng);
        auto z = random_indset_state(h, 40, rng);
        auto dxy = indset_metric(h, x, y, wt);
        REQUIRE(dxy == indset_metric(h, y, x, wt));
        REQUIRE((dxy == 0) == (x == y));
        REQUIRE(dxy <= indset_metric(h, x, z, wt) + indset_metric(h, z, y, wt));
    }
}

TEST_CASE("colouring metric is a metric on sampled states") {
    auto h = load_hg("data/triangle.hg");
    auto wt = tricol_weights(4, 1);
    RandomSource rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_proper_colouring(h, 4, 30, rng);
        auto y = random_proper_colouring(h, 4, 30, rng);
        auto z = random_proper_colouring(h, 4, 30, rng);
        auto dxy = tricol_metric(h, x, y, wt);
        REQUIRE(dxy == tricol_metric(h, y, x, wt));
        REQUIRE((dxy == 0) == (x == y));
        REQUIRE(dxy <= tricol_metric(h, x, z, wt) + tricol_metric(h, z, y, wt));
    }
}

TEST_CASE("adjacent occupancy distance uses the per-edge weights") {
    auto h = load_hg("data/single_edge.hg");
    auto wt = indset_weights(2, 1);
    OccupancyState empty(2);
    // Inserting vertex 1 with vertex 2 empty: one incident edge at level 0.
    REQUIRE(indset_adjacent_distance(h, empty, 1, wt) == wt.c[0]);
}

TEST_CASE("frozen occupancy drift example is exact with zero slack") {
    auto h = load_hg("data/overlap.hg");
    auto wt = indset_weights(4, 2);
    OccupancyState x(8), y(8);
    y.insert(1);
    auto rep = exact_onestep_drift_indset(h, x, y, wt);
    REQUIRE(rep.exact);
    REQUIRE(rep.pass);
    REQUIRE(rep.drift == Rational(-3, 34));
    REQUIRE(rep.d1_bound == rep.d1);  // the bound is attained exactly
}

TEST_CASE("frozen colouring drift example separates the two bounds") {
    Hypergraph h(3, {{1, 2, 3}});
    auto wt = tricol_weights(4, 1);
    ColouringState x(3, 4), y(3, 4);
    x.set_colour(1, 2);
    y.set_colour(1, 3);  // others share colour 1 in both copies
    auto rep = exact_onestep_drift_tricol(h, x, y, wt);
    REQUIRE(rep.equal_outside_edges == 1);
    REQUIRE(rep.drift == Rational(-7, 48));
    REQUIRE(rep.d1 == Rational(29, 48));
    REQUIRE_FALSE(rep.pass);       // the uniform per-vertex form fails here
    REQUIRE(rep.pass_sharp);       // the per-edge accounting holds with equality
    REQUIRE(rep.d1 == rep.d1_bound_sharp);
}

TEST_CASE("merged pairs report zero drift and stay merged") {
    auto h = load_hg("data/triangle.hg");
    auto wt = indset_weights(3, 1);
    OccupancyState s(3);
    s.insert(1);
    auto rep = exact_onestep_drift_indset(h, s, s, wt);
    REQUIRE(rep.merged);
    REQUIRE(rep.pass);

    RandomSource rng(47);
    auto x = s, y = s;
    for (int i = 0; i < 200; ++i) {
        std::tie(x, y) = coupled_indset_step(h, x, y, rng);
        REQUIRE(x == y);
    }
}

TEST_CASE("coupled occupancy components follow the single-chain stream") {
    auto h = load_hg("data/ring12.hg");
    RandomSource coupled_rng(53), single_rng(53);
    OccupancyState x(12), y(12);
    y.insert(1);
    OccupancyState solo(12);
    for (int i = 0; i < 500; ++i) {
        std::tie(x, y) = coupled_indset_step(h, x, y, coupled_rng);
        solo = glauber_indset_step(h, solo, single_rng);
        REQUIRE(x == solo);  // first component consumes the stream identically
        REQUIRE(is_independent(h, y));
    }
}

TEST_CASE("coupled colouring steps keep both copies proper") {
    auto h = load_hg("data/overlap.hg");
    RandomSource rng(59);
    auto [x, y] = random_adjacent_tricol_pair(h, 2, rng);
    for (int i = 0; i < 500; ++i) {
        std::tie(x, y) = coupled_tricol_step(h, x, y, rng);
        REQUIRE(is_proper(h, x));
        REQUIRE(is_proper(h, y));
    }
}

TEST_CASE("whole-graph coupled steps contract adjacent pairs on average") {
    auto g = gen_bipartite(8, 8, 3, 61);
    int q = 7;  // comfortably above the degree-3 threshold
    RandomSource rng(67);
    auto [x, y] = random_adjacent_bipartite_pair(g, q, rng);
    double before = to_double(bipartite_metric(g, x, y));
    double sum = 0;
    int reps = 400;
    for (int i = 0; i < reps; ++i) {
        auto r = rng.child(uint64_t(i));
        auto [x2, y2] = coupled_multicolour_step(g, x, y, r);
        sum += to_double(bipartite_metric(g, x2, y2));
    }
    REQUIRE(sum / reps < before);
    REQUIRE_THROWS_AS(coupled_multicolour_step(g, x, constant_colouring(g.vertex_count(), q, 1), rng),
                      std::invalid_argument);  // non-adjacent pair
}

TEST_CASE("random adjacent pairs are adjacent") {
    auto h = load_hg("data/path16.hg");
    RandomSource rng(71);
    for (int i = 0; i < 20; ++i) {
        auto [x, y] = random_adjacent_indset_pair(h, rng);
        REQUIRE(differing_vertices(x, y).size() == 1);
        auto [cx, cy] = random_adjacent_tricol_pair(h, 2, rng);
        REQUIRE(differing_vertices(cx, cy).size() == 1);
        REQUIRE(is_proper(h, cx));
        REQUIRE(is_proper(h, cy));
    }
}

TEST_CASE("stopping-time estimates contract on a small occupancy family") {
    auto h = gen_hypergraph(16, 4, 2, 13);
    auto wt = indset_weights(4, 2);
    IndSetCoupling c{h, wt};
    RandomSource rng(73);
    std::vector<std::pair<OccupancyState, OccupancyState>> pairs;
    for (int i = 0; i < 3; ++i) pairs.push_back(random_adjacent_indset_pair(h, rng));
    long k = 2L * h.vertex_count();
    auto st = estimate_alpha_p(c, pairs, k, 1000, 75);
    REQUIRE(st.reps == 1000);
    REQUIRE_FALSE(st.failed);
    REQUIRE(st.alpha_hat + 3 * st.alpha_stderr < 1.0);
    REQUIRE(st.p_hat > 0.5);
    REQUIRE(st.mean_d0 > 0);

    auto ck = contraction_check(c, pairs[0].first, pairs[0].second, k, 600, st.alpha_hat,
                                st.p_hat, 77);
    REQUIRE(ck.pass);
    auto tail = tail_bound_check(c, pairs[0].first, pairs[0].second, k, st.p_hat, 4 * k, 400, 79);
    REQUIRE(tail.pass);
    REQUIRE(tail.thresholds.size() == 4);
}

TEST_CASE("estimator input validation") {
    auto h = load_hg("data/single_edge.hg");
    auto wt = indset_weights(2, 1);
    IndSetCoupling c{h, wt};
    std::vector<std::pair<OccupancyState, OccupancyState>> pairs;
    OccupancyState x(2), y(2);
    y.insert(1);
    pairs.push_back({x, y});
    REQUIRE_THROWS_AS(estimate_alpha_p(c, pairs, 4, 999, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(
        estimate_alpha_p(c, std::vector<std::pair<OccupancyState, OccupancyState>>{}, 4, 1000, 1),
        std::invalid_argument);
}

TEST_CASE("a hard cap censors the runs that have not yet moved") {
    auto h = load_hg("data/ring12.hg");
    auto wt = indset_weights(4, 2);
    IndSetCoupling c{h, wt};
    RandomSource rng(83);
    auto pair = random_adjacent_indset_pair(h, rng);
    // With a one-step cap, only first steps that touch the disagreement resolve.
    auto st = estimate_alpha_p(c, {pair}, 4, 1000, 85, 1);
    REQUIRE(st.censored > 0);
    REQUIRE(st.censored < st.reps);
    REQUIRE_FALSE(st.failed);
}

namespace {
// Coupling whose step never moves: every stopping-time run must censor.
struct FrozenCoupling {
    using State = OccupancyState;
    int n;
    Rational distance(const State& x, const State& y) const {
        return Rational(int(differing_vertices(x, y).size()));
    }
    std::pair<State, State> step(const State& x, const State& y, RandomSource&) const {
        return {x, y};
    }
    int vertex_count() const { return n; }
};
}  // namespace

TEST_CASE("an estimator with every run censored reports failure") {
    FrozenCoupling c{4};
    OccupancyState x(4), y(4);
    y.insert(2);
    auto st = estimate_alpha_p(c, {{x, y}}, 2, 1000, 91, 10);
    REQUIRE(st.censored == st.reps);
    REQUIRE(st.failed);
}

TEST_CASE("coalescence times from identical and distinct starts") {
    std::ifstream in("data/k33.bg");
    auto g = parse_bipartite(in);
    MulticolourCoupling c{g};
    auto x = constant_colouring(g.vertex_count(), 6, 1);
    auto st0 = coalescence_time(c, x, x, 50, 1000, 87);
    REQUIRE(st0.censored == 0);
    REQUIRE(st0.mean == 0.0);

    auto y = constant_colouring(g.vertex_count(), 6, 2);
    auto st = coalescence_time(c, x, y, 50, 2000, 89);
    REQUIRE(st.censored == 0);
    REQUIRE(st.times.size() == 50);
    REQUIRE(st.mean > 0);
    REQUIRE(st.max >= st.median);
}

TEST_CASE("default stopping cap scales with instance size") {
    REQUIRE(default_stopping_cap(10, 20) == 100L * 10 * 20);
}
