#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "mixtime/instances/generate.hpp"
#include "mixtime/instances/io.hpp"
#include "mixtime/instances/monotone_cnf.hpp"
#include "mixtime/instances/states.hpp"

using namespace mixtime;

static Hypergraph load_hg(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return parse_hypergraph(in);
}

TEST_CASE("hypergraph corpus files parse") {
    auto h = load_hg("data/overlap.hg");
    REQUIRE(h.vertex_count() == 8);
    REQUIRE(h.edge_count() == 3);
    REQUIRE(h.max_degree() == 2);
    REQUIRE(h.min_edge_size() == 4);
    REQUIRE(h.uniform_edge_size());
    REQUIRE(h.edge(0) == std::vector<int>{1, 2, 3, 4});

    auto mixed = load_hg("data/mixed20.hg");
    REQUIRE(mixed.vertex_count() == 20);
    REQUIRE_FALSE(mixed.uniform_edge_size());
}

TEST_CASE("hypergraph round-trips through serialization") {
    auto h = load_hg("data/ring12.hg");
    std::ostringstream out;
    serialize(out, h);
    std::istringstream back(out.str());
    auto h2 = parse_hypergraph(back);
    REQUIRE(h.vertex_count() == h2.vertex_count());
    REQUIRE(h.edges() == h2.edges());
}

TEST_CASE("hypergraph parser rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        REQUIRE_THROWS_AS(parse_hypergraph(in), ParseError);
    };
    reject("");                      // missing header
    reject("3\n1 2 3\n");            // header needs two fields
    reject("3 1\n");                 // fewer edges than promised
    reject("3 1\n1 2 4\n");          // vertex out of range
    reject("3 1\n1 1 2\n");          // duplicate vertex within an edge
    reject("3 1\n2\n");              // edge too small
    reject("3 1\n1 2 x\n");          // trailing junk
}

TEST_CASE("comments and blank lines are skipped") {
    std::istringstream in("# a comment\n\n  # another\n3 1\n# inside\n1 2 3\n");
    auto h = parse_hypergraph(in);
    REQUIRE(h.vertex_count() == 3);
    REQUIRE(h.edge_count() == 1);
}

TEST_CASE("bipartite corpus files parse and round-trip") {
    std::ifstream in("data/cycle8.bg");
    REQUIRE(in.good());
    auto g = parse_bipartite(in);
    REQUIRE(g.left_size() == 4);
    REQUIRE(g.right_size() == 4);
    REQUIRE(g.vertex_count() == 8);
    REQUIRE(g.edges().size() == 8);
    for (int v = 1; v <= 8; ++v) REQUIRE(g.neighbours(v).size() == 2);

    std::ostringstream out;
    serialize(out, g);
    std::istringstream back(out.str());
    auto g2 = parse_bipartite(back);
    REQUIRE(g.edges() == g2.edges());
}

TEST_CASE("bipartite parser rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        REQUIRE_THROWS_AS(parse_bipartite(in), ParseError);
    };
    reject("2 2\n1 1\n");      // header needs three fields
    reject("2 2 1\n3 1\n");    // left id out of range
    reject("2 2 1\n1 3\n");    // right id out of range
    reject("2 2 1\n1 1 1\n");  // edge line needs exactly two ids
}

TEST_CASE("dimacs files parse with comments and multi-line clauses") {
    std::ifstream in("data/overlap.cnf");
    REQUIRE(in.good());
    auto f = parse_dimacs(in);
    REQUIRE(f.variable_count() == 8);
    REQUIRE(f.clauses().size() == 3);

    std::istringstream split("p cnf 4 1\n1 2\n3 4 0\n");
    auto g = parse_dimacs(split);
    REQUIRE(g.clauses().front() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("dimacs parser rejects bad formulas") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        REQUIRE_THROWS_AS(parse_dimacs(in), ParseError);
    };
    reject("1 2 0\n");                    // clause before header
    reject("p cnf 3 1\n-1 2 0\n");        // negative literal
    reject("p cnf 3 1\n1 4 0\n");         // variable out of range
    reject("p cnf 3 1\n1 2\n");           // unterminated clause
    reject("p cnf 3 2\n1 2 0\n");         // clause count mismatch
    reject("p dnf 3 1\n1 2 0\n");         // wrong problem type
}

TEST_CASE("formula and hypergraph encodings translate back and forth") {
    auto h = load_hg("data/overlap.hg");
    auto f = to_monotone_cnf(h);
    REQUIRE(f.variable_count() == h.vertex_count());
    REQUIRE(f.clauses().size() == size_t(h.edge_count()));
    auto h2 = from_monotone_cnf(f);
    REQUIRE(h2.vertex_count() == h.vertex_count());
    REQUIRE(h2.edge_count() == h.edge_count());
    std::ostringstream out;
    serialize(out, f);
    std::istringstream back(out.str());
    auto f2 = parse_dimacs(back);
    REQUIRE(f.clauses() == f2.clauses());
}

TEST_CASE("monotone cnf normalizes clauses") {
    MonotoneCnf f(5, {{3, 1, 3}, {2, 4}});
    REQUIRE(f.clauses().front() == std::vector<int>{1, 3});
    REQUIRE_THROWS_AS(MonotoneCnf(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MonotoneCnf(3, {{}}), std::invalid_argument);
    REQUIRE_THROWS_AS(MonotoneCnf(0, {}), std::invalid_argument);
}

TEST_CASE("generated hypergraphs respect their contract") {
    auto h = gen_hypergraph(24, 4, 2, 5);
    REQUIRE(h.vertex_count() == 24);
    REQUIRE(h.uniform_edge_size());
    REQUIRE(h.min_edge_size() == 4);
    REQUIRE(h.max_degree() <= 2);
    std::vector<int> degree(25, 0);
    for (const auto& e : h.edges())
        for (int v : e) ++degree[size_t(v)];
    for (int v = 1; v <= 24; ++v) REQUIRE(degree[size_t(v)] >= 1);

    auto again = gen_hypergraph(24, 4, 2, 5);
    REQUIRE(h.edges() == again.edges());
    auto other = gen_hypergraph(24, 4, 2, 6);
    REQUIRE(h.edges() != other.edges());
}

TEST_CASE("generated bipartite graphs respect their contract") {
    auto g = gen_bipartite(10, 10, 3, 7);
    REQUIRE(g.left_size() == 10);
    REQUIRE(g.right_size() == 10);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        REQUIRE(g.neighbours(v).size() >= 1);
        REQUIRE(g.neighbours(v).size() <= 3);
    }
    auto again = gen_bipartite(10, 10, 3, 7);
    REQUIRE(g.edges() == again.edges());
}

TEST_CASE("occupancy state basics") {
    OccupancyState s(4);
    REQUIRE(s.size() == 0);
    s.insert(2);
    s.insert(4);
    REQUIRE(s.contains(2));
    REQUIRE_FALSE(s.contains(3));
    REQUIRE(s.size() == 2);
    REQUIRE(s.members() == std::vector<int>{2, 4});
    s.erase(2);
    REQUIRE(s.size() == 1);
}

TEST_CASE("independence and properness checks") {
    auto h = load_hg("data/triangle.hg");
    OccupancyState s(3);
    s.insert(1);
    s.insert(2);
    REQUIRE(is_independent(h, s));
    REQUIRE_FALSE(insertion_independent(h, s, 3));
    s.insert(3);
    REQUIRE_FALSE(is_independent(h, s));

    ColouringState c(3, 3);
    REQUIRE_FALSE(is_proper(h, c));  // constant colouring is monochromatic
    c.set_colour(3, 2);
    REQUIRE(is_proper(h, c));
}
