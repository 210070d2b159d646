#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mixtime/analysis/numbers.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/monotone_cnf.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

struct CountResult {
    Integer count = 0;
    long long states_visited = 0;
};

// Exhaustive count of independent sets by bitmask sweep.
inline CountResult brute_count_indsets(const Hypergraph& h) {
    int n = h.vertex_count();
    if (n > 25) throw std::invalid_argument("instance too large for exhaustive count");
    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        for (int v : e) m |= std::uint32_t(1) << (v - 1);
        edge_masks.push_back(m);
    }
    CountResult out;
    std::uint32_t last = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 0;; ++mask) {
        ++out.states_visited;
        bool ok = true;
        for (auto em : edge_masks)
            if ((mask & em) == em) { ok = false; break; }
        if (ok) out.count += 1;
        if (mask == last) break;
    }
    return out;
}

// Exhaustive count of satisfying assignments of a monotone formula.
inline CountResult brute_count_sat(const MonotoneCnf& f) {
    int n = f.variable_count();
    if (n > 25) throw std::invalid_argument("instance too large for exhaustive count");
    std::vector<std::uint32_t> clause_masks;
    for (const auto& c : f.clauses()) {
        std::uint32_t m = 0;
        for (int v : c) m |= std::uint32_t(1) << (v - 1);
        clause_masks.push_back(m);
    }
    CountResult out;
    std::uint32_t last = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 0;; ++mask) {
        ++out.states_visited;
        bool ok = true;
        for (auto cm : clause_masks)
            if ((mask & cm) == 0) { ok = false; break; }
        if (ok) out.count += 1;
        if (mask == last) break;
    }
    return out;
}

namespace detail {

inline void count_colourings_rec(const Hypergraph& h, int palette, int v,
                                 std::vector<std::vector<int>> const& closing_edges,
                                 ColouringState& s, CountResult& out) {
    int n = h.vertex_count();
    if (v > n) {
        out.count += 1;
        return;
    }
    for (int c = 1; c <= palette; ++c) {
        s.set_colour(v, c);
        ++out.states_visited;
        bool ok = true;
        for (int j : closing_edges[size_t(v)]) {
            bool mono = true;
            for (int u : h.edge(j))
                if (s.colour(u) != c) { mono = false; break; }
            if (mono) { ok = false; break; }
        }
        if (ok) count_colourings_rec(h, palette, v + 1, closing_edges, s, out);
    }
}

}  // namespace detail

// Exhaustive count of proper colourings, pruning as soon as an edge is fully
// assigned and monochromatic.
inline CountResult brute_count_colourings(const Hypergraph& h, int palette) {
    int n = h.vertex_count();
    double space = 1;
    for (int v = 0; v < n; ++v) {
        space *= palette;
        if (space > 1e8) throw std::invalid_argument("instance too large for exhaustive count");
    }
    // Edge j is checked at its highest vertex, when all its colours are known.
    std::vector<std::vector<int>> closing_edges(size_t(n) + 1);
    for (int j = 0; j < h.edge_count(); ++j) closing_edges[size_t(h.edge(j).back())].push_back(j);
    CountResult out;
    ColouringState s(n, palette);
    detail::count_colourings_rec(h, palette, 1, closing_edges, s, out);
    return out;
}

}  // namespace mixtime
