#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/numbers.hpp"
#include "mixtime/analysis/tricol_weights.hpp"
#include "mixtime/coupling/profiles.hpp"
#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

// Distance between an independent set and its extension by one vertex:
// weight c_i per incident edge with i occupied endpoints elsewhere.
inline Rational indset_adjacent_distance(const Hypergraph& h, const OccupancyState& sigma,
                                         int w, const IndSetWeights& wt) {
    auto p = edge_profile(h, sigma, w);
    Rational d = 0;
    for (size_t i = 0; i < p.counts.size(); ++i)
        if (p.counts[i]) d += wt.c[i] * p.counts[i];
    return d;
}

template <class State>
inline std::vector<int> differing_vertices(const State& x, const State& y) {
    std::vector<int> out;
    for (int v = 1; v <= x.vertex_count(); ++v) {
        if constexpr (requires { x.contains(v); }) {
            if (x.contains(v) != y.contains(v)) out.push_back(v);
        } else {
            if (x.colour(v) != y.colour(v)) out.push_back(v);
        }
    }
    return out;
}

// Extension to arbitrary pairs: walk a canonical vertex-by-vertex path and sum
// the adjacent distances. The walk starts at the lexicographically smaller
// endpoint (making the value symmetric) and deletes before inserting, which
// keeps every intermediate set independent.
inline Rational indset_metric(const Hypergraph& h, const OccupancyState& x,
                              const OccupancyState& y, const IndSetWeights& wt) {
    if (!is_independent(h, x) || !is_independent(h, y))
        throw std::invalid_argument("metric needs independent sets");
    if (x == y) return 0;
    const OccupancyState& from = x < y ? x : y;
    const OccupancyState& to = x < y ? y : x;

    OccupancyState cur = from;
    Rational d = 0;
    for (int v = 1; v <= h.vertex_count(); ++v)
        if (from.contains(v) && !to.contains(v)) {
            cur.erase(v);
            d += indset_adjacent_distance(h, cur, v, wt);
        }
    for (int v = 1; v <= h.vertex_count(); ++v)
        if (to.contains(v) && !from.contains(v)) {
            d += indset_adjacent_distance(h, cur, v, wt);
            cur.insert(v);
        }
    return d;
}

// Distance between proper colourings differing at one vertex: class weights
// over the incident-edge classification.
inline Rational tricol_adjacent_distance(const Hypergraph& h, const ColouringState& x,
                                         const ColouringState& y, const TriColWeights& wt) {
    auto p = tricol_classify(h, x, y);
    Rational d = 0;
    for (int cls = 1; cls <= 4; ++cls)
        if (p.counts[size_t(cls) - 1]) d += wt.weight(cls) * p.counts[size_t(cls) - 1];
    return d;
}

// Canonical path between proper colourings: recolour differing vertices in
// ascending order, each step keeping the colouring proper. A vertex whose
// target colour is currently blocked is deferred; if a full sweep defers
// everything, the first deferred vertex detours through the smallest colour
// proper for it, which exists because the palette exceeds max degree + 1.
inline Rational tricol_metric(const Hypergraph& h, const ColouringState& x,
                              const ColouringState& y, const TriColWeights& wt) {
    if (!is_proper(h, x) || !is_proper(h, y))
        throw std::invalid_argument("metric needs proper colourings");
    if (x == y) return 0;
    const ColouringState& from = x < y ? x : y;
    const ColouringState& to = x < y ? y : x;

    ColouringState cur = from;
    Rational d = 0;
    long guard = 8L * (h.vertex_count() + 1) * (from.palette() + 1);
    auto pending = differing_vertices(cur, to);
    size_t detour_at = 0;
    while (!pending.empty()) {
        bool advanced = false;
        for (size_t i = 0; i < pending.size(); ++i) {
            int v = pending[i];
            if (recolour_proper(h, cur, v, to.colour(v))) {
                ColouringState next = cur;
                next.set_colour(v, to.colour(v));
                d += tricol_adjacent_distance(h, cur, next, wt);
                cur = next;
                pending.erase(pending.begin() + long(i));
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            int v = pending[detour_at % pending.size()];
            ++detour_at;
            int aux = 0;
            for (int c = 1; c <= cur.palette(); ++c)
                if (c != cur.colour(v) && c != to.colour(v) && recolour_proper(h, cur, v, c)) {
                    aux = c;
                    break;
                }
            if (aux == 0) throw std::logic_error("no detour colour available");
            ColouringState next = cur;
            next.set_colour(v, aux);
            d += tricol_adjacent_distance(h, cur, next, wt);
            cur = next;
        }
        if (--guard < 0) throw std::logic_error("path routing failed to terminate");
    }
    return d;
}

// Distinct colours worn by the neighbours of u.
inline int neighbour_colour_count(const BipartiteGraph& g, const ColouringState& s, int u) {
    std::vector<bool> seen(size_t(s.palette()) + 1, false);
    int distinct = 0;
    for (int t : g.neighbours(u))
        if (!seen[size_t(s.colour(t))]) {
            seen[size_t(s.colour(t))] = true;
            ++distinct;
        }
    return distinct;
}

// Distance between colourings differing at v: one term per neighbour, larger
// when fewer colours are free around that neighbour in the freer copy.
inline Rational bipartite_adjacent_distance(const BipartiteGraph& g, const ColouringState& x,
                                            const ColouringState& y, int v) {
    int q = x.palette();
    Rational d = 0;
    for (int u : g.neighbours(v)) {
        int c = std::min(neighbour_colour_count(g, x, u), neighbour_colour_count(g, y, u));
        d += Rational(1, q - c);
    }
    return d;
}

// Canonical path extension: recolour differing vertices in ascending order
// from the lexicographically smaller endpoint; properness is not required, so
// no routing is needed.
inline Rational bipartite_metric(const BipartiteGraph& g, const ColouringState& x,
                                 const ColouringState& y) {
    if (x == y) return 0;
    const ColouringState& from = x < y ? x : y;
    const ColouringState& to = x < y ? y : x;
    ColouringState cur = from;
    Rational d = 0;
    for (int v : differing_vertices(from, to)) {
        ColouringState next = cur;
        next.set_colour(v, to.colour(v));
        d += bipartite_adjacent_distance(g, cur, next, v);
        cur = next;
    }
    return d;
}

}  // namespace mixtime
