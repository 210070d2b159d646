#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/monotone_cnf.hpp"

namespace mixtime {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

namespace detail {
// Next content line; '#' lines are comments. Returns false at EOF.
inline bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

inline std::vector<long> ints_of(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<long> out;
    long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.clear(), ss >> rest) throw ParseError(lineno, "unexpected token '" + rest + "'");
    return out;
}
}  // namespace detail

// Format: header "n k", then k edge lines of vertex ids; '#' comments.
inline Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(in, line, lineno)) throw ParseError(lineno, "missing header");
    auto head = detail::ints_of(line, lineno);
    if (head.size() != 2 || head[0] < 1 || head[1] < 0)
        throw ParseError(lineno, "malformed header, expected 'n k'");
    int n = int(head[0]);
    long k = head[1];

    std::vector<std::vector<int>> edges;
    for (long j = 0; j < k; ++j) {
        if (!detail::next_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(k) + " edges, got " + std::to_string(j));
        auto ids = detail::ints_of(line, lineno);
        std::vector<int> e;
        for (long v : ids) {
            if (v < 1 || v > n) throw ParseError(lineno, "vertex id out of range: " + std::to_string(v));
            e.push_back(int(v));
        }
        auto sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(lineno, "duplicate vertex within edge");
        if (e.size() < 2) throw ParseError(lineno, "edge with fewer than 2 vertices");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

inline void serialize(std::ostream& out, const Hypergraph& h) {
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

// Format: header "n1 n2 k", then k lines "u v".
inline BipartiteGraph parse_bipartite(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!detail::next_line(in, line, lineno)) throw ParseError(lineno, "missing header");
    auto head = detail::ints_of(line, lineno);
    if (head.size() != 3 || head[0] < 1 || head[1] < 1 || head[2] < 0)
        throw ParseError(lineno, "malformed header, expected 'n1 n2 k'");
    int n1 = int(head[0]), n2 = int(head[1]);
    long k = head[2];

    std::vector<std::pair<int, int>> edges;
    for (long j = 0; j < k; ++j) {
        if (!detail::next_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(k) + " edges, got " + std::to_string(j));
        auto ids = detail::ints_of(line, lineno);
        if (ids.size() != 2) throw ParseError(lineno, "expected 'u v'");
        if (ids[0] < 1 || ids[0] > n1) throw ParseError(lineno, "left id out of range: " + std::to_string(ids[0]));
        if (ids[1] < 1 || ids[1] > n2) throw ParseError(lineno, "right id out of range: " + std::to_string(ids[1]));
        edges.push_back({int(ids[0]), int(ids[1])});
    }
    try {
        return BipartiteGraph(n1, n2, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

inline void serialize(std::ostream& out, const BipartiteGraph& g) {
    out << g.left_size() << ' ' << g.right_size() << ' ' << g.edges().size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// DIMACS CNF, monotone clauses only (all literals positive).
inline MonotoneCnf parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long k = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == 'c') continue;
        if (line[pos] == 'p') {
            std::istringstream ss(line);
            std::string p, cnf;
            if (!(ss >> p >> cnf >> n >> k) || cnf != "cnf" || n < 1 || k < 0)
                throw ParseError(lineno, "malformed problem line, expected 'p cnf n k'");
            continue;
        }
        if (n < 0) throw ParseError(lineno, "clause before 'p cnf' header");
        for (long lit : detail::ints_of(line, lineno)) {
            if (lit == 0) {
                if (current.empty()) throw ParseError(lineno, "empty clause");
                clauses.push_back(current);
                current.clear();
            } else if (lit < 0) {
                throw ParseError(lineno, "negative literal " + std::to_string(lit) + " (monotone CNF only)");
            } else if (lit > n) {
                throw ParseError(lineno, "variable out of range: " + std::to_string(lit));
            } else {
                current.push_back(int(lit));
            }
        }
    }
    if (!current.empty()) throw ParseError(lineno, "unterminated clause (missing 0)");
    if (n < 0) throw ParseError(lineno, "missing 'p cnf' header");
    if (long(clauses.size()) != k)
        throw ParseError(lineno, "clause count mismatch: header says " + std::to_string(k) +
                                     ", found " + std::to_string(clauses.size()));
    try {
        return MonotoneCnf(n, std::move(clauses));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

inline void serialize(std::ostream& out, const MonotoneCnf& f) {
    out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
    for (const auto& c : f.clauses()) {
        for (int v : c) out << v << ' ';
        out << "0\n";
    }
}

}  // namespace mixtime
