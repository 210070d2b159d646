#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>

#include "mixtime/chains/glauber.hpp"
#include "mixtime/chains/multicolour.hpp"
#include "mixtime/chains/transition_matrix.hpp"
#include "mixtime/instances/generate.hpp"
#include "mixtime/instances/io.hpp"

using namespace mixtime;

static Hypergraph load_hg(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return parse_hypergraph(in);
}

TEST_CASE("state enumeration is complete and ordered") {
    auto tri = load_hg("data/triangle.hg");
    auto sets = enumerate_indsets(tri);
    REQUIRE(sets.size() == 7);  // everything but the full edge
    REQUIRE(std::is_sorted(sets.begin(), sets.end()));
    REQUIRE(sets.front().size() == 0);
    for (const auto& s : sets) REQUIRE(is_independent(tri, s));
    REQUIRE(state_index(sets, sets[3]) == 3);

    auto cols = enumerate_proper_colourings(tri, 3);
    REQUIRE(cols.size() == 24);  // 27 assignments minus 3 monochromatic
    for (const auto& c : cols) REQUIRE(is_proper(tri, c));
}

TEST_CASE("occupancy kernel is doubly stochastic with uniform fixed point") {
    for (const char* path : {"data/single_edge.hg", "data/triangle.hg", "data/overlap.hg"}) {
        auto h = load_hg(path);
        auto states = enumerate_indsets(h);
        auto k = indset_kernel(h, states);
        INFO(path);
        REQUIRE(k.size() == int(states.size()));
        REQUIRE(k.denominator == 2 * h.vertex_count());
        REQUIRE(is_row_stochastic(k));
        REQUIRE(is_symmetric(k));
        REQUIRE(stationarity_error(k) == 0.0);
    }
}

TEST_CASE("occupancy kernel entries match the proposal rule") {
    auto h = load_hg("data/single_edge.hg");
    auto states = enumerate_indsets(h);  // {}, {2}, {1}
    auto k = indset_kernel(h, states);
    OccupancyState empty(2), one(2);
    one.insert(1);
    int i = state_index(states, empty), j = state_index(states, one);
    // Insert proposals are (vertex, insert) with probability 1/(2n) each.
    REQUIRE(k.rows[size_t(i)].at(j) == 1);
    REQUIRE(k.rows[size_t(i)].at(i) == 2);  // two rejected removals
    REQUIRE(k.rows[size_t(j)].at(i) == 1);
}

TEST_CASE("colouring kernel is doubly stochastic with uniform fixed point") {
    auto tri = load_hg("data/triangle.hg");
    auto cols = enumerate_proper_colourings(tri, 3);
    auto k = tricol_kernel(tri, 3, cols);
    REQUIRE(k.denominator == 3 * 3);
    REQUIRE(is_row_stochastic(k));
    REQUIRE(is_symmetric(k));
    REQUIRE(stationarity_error(k) == 0.0);
}

TEST_CASE("state enumeration refuses oversized spaces") {
    auto big = gen_hypergraph(30, 4, 2, 3);  // far more than 4096 independent sets
    REQUIRE_THROWS_AS(enumerate_indsets(big), std::invalid_argument);
}

TEST_CASE("exact transition matrix dispatches by chain kind") {
    auto tri = load_hg("data/triangle.hg");
    ChainSpec spec;
    spec.kind = ChainKind::indset;
    auto res = exact_transition_matrix(spec, tri);
    REQUIRE(res.indset_states.size() == 7);
    REQUIRE(res.kernel.size() == 7);

    spec.kind = ChainKind::tricol;
    spec.palette = 3;
    auto res2 = exact_transition_matrix(spec, tri);
    REQUIRE(res2.colouring_states.size() == 24);

    spec.kind = ChainKind::multicolour;
    REQUIRE_THROWS_AS(exact_transition_matrix(spec, tri), std::invalid_argument);
}

TEST_CASE("single-site occupancy steps preserve independence and determinism") {
    auto h = load_hg("data/ring12.hg");
    RandomSource a(31), b(31);
    OccupancyState s(h.vertex_count()), t(h.vertex_count());
    for (int i = 0; i < 2000; ++i) {
        s = glauber_indset_step(h, s, a);
        t = glauber_indset_step(h, t, b);
        REQUIRE(is_independent(h, s));
    }
    REQUIRE(s == t);
    REQUIRE(s.size() > 0);  // the walk left the empty set
}

TEST_CASE("blocked insertions are rejected in place") {
    auto tri = load_hg("data/triangle.hg");
    OccupancyState s(3);
    s.insert(1);
    s.insert(2);
    auto next = apply_indset(tri, s, IndSetProposal{3, true});
    REQUIRE(next == s);  // inserting 3 would fill the edge
    auto removed = apply_indset(tri, s, IndSetProposal{2, false});
    REQUIRE_FALSE(removed.contains(2));
}

TEST_CASE("single-site recolouring preserves properness") {
    auto h = load_hg("data/overlap.hg");
    auto s = greedy_colouring(h, 2);
    REQUIRE(is_proper(h, s));
    RandomSource rng(17);
    for (int i = 0; i < 2000; ++i) {
        s = glauber_tricol_step(h, s, rng);
        REQUIRE(is_proper(h, s));
    }
}

TEST_CASE("improper recolourings are rejected in place") {
    auto tri = load_hg("data/triangle.hg");
    ColouringState s(3, 3);
    s.set_colour(3, 2);  // colours 1,1,2
    auto next = apply_tricol(tri, s, TriColProposal{3, 1});  // would go monochromatic
    REQUIRE(next == s);
    auto moved = apply_tricol(tri, s, TriColProposal{1, 3});
    REQUIRE(moved.colour(1) == 3);
}

TEST_CASE("greedy colouring fails loudly when the palette is too small") {
    auto tri = load_hg("data/triangle.hg");
    REQUIRE_THROWS_AS(greedy_colouring(tri, 1), std::invalid_argument);
}

TEST_CASE("trajectory recorders keep one record per step") {
    auto h = load_hg("data/two_edges.hg");
    RandomSource rng(5);
    auto recs = run_indset(h, OccupancyState(h.vertex_count()), 50, rng);
    REQUIRE(recs.size() == 50);
    auto cols = run_tricol(h, greedy_colouring(h, 3), 50, rng);
    REQUIRE(cols.size() == 50);
}

TEST_CASE("whole-graph steps produce proper colourings from any start") {
    std::ifstream in("data/k33.bg");
    auto g = parse_bipartite(in);
    ColouringState s(g.vertex_count(), 5);  // constant start, improper
    RandomSource rng(23);
    s = multicolour_step(g, s, rng);
    REQUIRE(is_proper(g, s));
    for (long t = 0; t < 200; ++t) {
        s = (t % 2 == 0) ? multicolour_step(g, s, rng) : scan_step(g, s, rng, t);
        REQUIRE(is_proper(g, s));
    }
}

TEST_CASE("whole-graph heat bath explores the palette") {
    std::ifstream in("data/cycle8.bg");
    auto g = parse_bipartite(in);
    RandomSource rng(29);
    ColouringState s(g.vertex_count(), 3);
    std::map<int, long> seen;
    for (int i = 0; i < 300; ++i) {
        s = multicolour_step(g, s, rng);
        for (int v = 1; v <= g.vertex_count(); ++v) ++seen[s.colour(v)];
    }
    REQUIRE(seen.size() == 3);  // every colour appears somewhere in the run
}
