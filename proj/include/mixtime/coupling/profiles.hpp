#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

// Classification of the edges through a change vertex. Independent-set mode
// buckets by occupied count among the other endpoints; colouring mode buckets
// into the four colour-pattern classes relative to the two change colours.
struct EdgeProfile {
    std::vector<long> counts;

    long total() const { return std::accumulate(counts.begin(), counts.end(), 0L); }
};

inline EdgeProfile edge_profile(const Hypergraph& h, const OccupancyState& sigma, int w) {
    if (!h.uniform_edge_size()) throw std::invalid_argument("profile needs uniform edge size");
    if (sigma.contains(w)) throw std::invalid_argument("change vertex must be unoccupied");
    if (!is_independent(h, sigma) || !insertion_independent(h, sigma, w))
        throw std::invalid_argument("both sides of the pair must be independent");
    int m = h.min_edge_size();
    EdgeProfile p;
    p.counts.assign(size_t(m) - 1, 0);  // occupied counts 0..m-2
    for (int j : h.incident_edges(w)) {
        int occupied = 0;
        for (int u : h.edge(j))
            if (u != w && sigma.contains(u)) ++occupied;
        p.counts[size_t(occupied)] += 1;
    }
    return p;
}

// The change vertex of a pair differing at exactly one vertex.
template <class State>
inline int change_vertex(const State& x, const State& y) {
    int w = 0;
    for (int v = 1; v <= x.vertex_count(); ++v) {
        bool differs;
        if constexpr (requires { x.contains(v); })
            differs = x.contains(v) != y.contains(v);
        else
            differs = x.colour(v) != y.colour(v);
        if (differs) {
            if (w != 0) throw std::invalid_argument("states differ at more than one vertex");
            w = v;
        }
    }
    if (w == 0) throw std::invalid_argument("states are equal");
    return w;
}

// Classes for a proper pair differing at w, by the other endpoints' colours:
// both change colours / one change colour / equal outside colours / distinct
// outside colours. Monochromatic patterns in either copy are rejected.
inline EdgeProfile tricol_classify(const Hypergraph& h, const ColouringState& x,
                                   const ColouringState& y) {
    if (!h.uniform_edge_size() || h.min_edge_size() != 3)
        throw std::invalid_argument("classification needs 3-uniform edges");
    int w = change_vertex(x, y);
    int c1 = x.colour(w), c2 = y.colour(w);
    EdgeProfile p;
    p.counts.assign(4, 0);
    for (int j : h.incident_edges(w)) {
        int a = 0, b = 0;
        for (int u : h.edge(j))
            if (u != w) (a == 0 ? a : b) = u;
        int ca = x.colour(a), cb = x.colour(b);
        bool a_change = ca == c1 || ca == c2;
        bool b_change = cb == c1 || cb == c2;
        if (a_change && b_change) {
            if (ca == cb)
                throw std::invalid_argument("pair is not proper at a classified edge");
            p.counts[0] += 1;
        } else if (a_change || b_change) {
            p.counts[1] += 1;
        } else if (ca == cb) {
            p.counts[2] += 1;
        } else {
            p.counts[3] += 1;
        }
    }
    return p;
}

}  // namespace mixtime
