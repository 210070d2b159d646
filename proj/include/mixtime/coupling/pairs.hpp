#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mixtime/chains/glauber.hpp"
#include "mixtime/chains/multicolour.hpp"
#include "mixtime/chains/random_source.hpp"
#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

// Samplers for experiment start states and pairs differing at one vertex.

inline OccupancyState random_indset_state(const Hypergraph& h, long burn, RandomSource& rng) {
    OccupancyState s(h.vertex_count());
    for (long t = 0; t < burn; ++t) s = glauber_indset_step(h, s, rng);
    return s;
}

// Burned-in state plus one insertable vertex; retries if the walk landed on a
// maximal independent set.
inline std::pair<OccupancyState, OccupancyState> random_adjacent_indset_pair(const Hypergraph& h,
                                                                             RandomSource& rng) {
    int n = h.vertex_count();
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto sigma = random_indset_state(h, 4L * n, rng);
        std::vector<int> insertable;
        for (int v = 1; v <= n; ++v)
            if (!sigma.contains(v) && insertion_independent(h, sigma, v)) insertable.push_back(v);
        if (insertable.empty()) continue;
        int w = insertable[size_t(rng.below(uint64_t(insertable.size())))];
        auto other = sigma;
        other.insert(w);
        return {sigma, other};
    }
    throw std::runtime_error("could not find an insertable vertex");
}

inline ColouringState random_proper_colouring(const Hypergraph& h, int palette, long burn,
                                              RandomSource& rng) {
    auto s = greedy_colouring(h, palette);
    for (long t = 0; t < burn; ++t) s = glauber_tricol_step(h, s, rng);
    return s;
}

// Proper pair differing at one vertex, both sides proper by construction.
inline std::pair<ColouringState, ColouringState> random_adjacent_tricol_pair(const Hypergraph& h,
                                                                             int palette,
                                                                             RandomSource& rng) {
    int n = h.vertex_count();
    auto x = random_proper_colouring(h, palette, 4L * n, rng);
    for (int attempt = 0; attempt < 64 * n; ++attempt) {
        int v = 1 + int(rng.below(uint64_t(n)));
        if (h.degree(v) == 0) continue;
        std::vector<int> alternatives;
        for (int c = 1; c <= palette; ++c)
            if (c != x.colour(v) && recolour_proper(h, x, v, c)) alternatives.push_back(c);
        if (alternatives.empty()) continue;
        auto y = x;
        y.set_colour(v, alternatives[size_t(rng.below(uint64_t(alternatives.size())))]);
        return {x, y};
    }
    throw std::runtime_error("could not find a recolourable vertex");
}

// One full two-sided sweep from a uniform random colouring; the sweep leaves
// every edge bichromatic, so the result is proper.
inline ColouringState random_bipartite_colouring(const BipartiteGraph& g, int palette,
                                                 RandomSource& rng) {
    ColouringState s(g.vertex_count(), palette);
    for (int v = 1; v <= g.vertex_count(); ++v)
        s.set_colour(v, 1 + int(rng.below(uint64_t(palette))));
    return multicolour_step(g, s, rng);
}

// Pair differing at one vertex; the whole-graph analysis does not require
// properness, so the second colour is drawn freely.
inline std::pair<ColouringState, ColouringState> random_adjacent_bipartite_pair(
    const BipartiteGraph& g, int palette, RandomSource& rng) {
    auto x = random_bipartite_colouring(g, palette, rng);
    int v = 1 + int(rng.below(uint64_t(g.vertex_count())));
    int shift = 1 + int(rng.below(uint64_t(palette) - 1));
    auto y = x;
    y.set_colour(v, 1 + (x.colour(v) - 1 + shift) % palette);
    return {x, y};
}

}  // namespace mixtime
