#pragma once

#include <stdexcept>
#include <vector>

#include "mixtime/chains/random_source.hpp"
#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

// Colours currently blocked at v: everything its neighbours wear.
inline std::vector<bool> blocked_colours(const BipartiteGraph& g, const ColouringState& s, int v) {
    std::vector<bool> blocked(size_t(s.palette()) + 1, false);
    for (int u : g.neighbours(v)) blocked[size_t(s.colour(u))] = true;
    return blocked;
}

inline int available_colour_count(const BipartiteGraph& g, const ColouringState& s, int v) {
    auto blocked = blocked_colours(g, s, v);
    int avail = 0;
    for (int c = 1; c <= s.palette(); ++c) avail += !blocked[size_t(c)];
    return avail;
}

// Uniform draw from the available colours at v, ascending-colour indexing.
inline int heat_bath_colour(const BipartiteGraph& g, const ColouringState& s, int v,
                            RandomSource& rng) {
    auto blocked = blocked_colours(g, s, v);
    int avail = 0;
    for (int c = 1; c <= s.palette(); ++c) avail += !blocked[size_t(c)];
    if (avail == 0) throw std::invalid_argument("no available colour; palette too small");
    int pick = int(rng.below(uint64_t(avail)));
    for (int c = 1; c <= s.palette(); ++c) {
        if (blocked[size_t(c)]) continue;
        if (pick-- == 0) return c;
    }
    throw std::logic_error("heat-bath draw fell through");
}

// Recolour every vertex of one side in ascending id order. Within a side no
// two vertices are adjacent, so the order does not change the distribution;
// fixing it keeps runs reproducible.
inline void recolour_side(const BipartiteGraph& g, ColouringState& s, int side,
                          RandomSource& rng) {
    for (int v : g.side_vertices(side)) s.set_colour(v, heat_bath_colour(g, s, v, rng));
}

// Whole-graph step: pick a side uniformly, recolour it, then the other side.
// Accepts improper starts; the output is always proper.
inline ColouringState multicolour_step(const BipartiteGraph& g, const ColouringState& s,
                                       RandomSource& rng) {
    ColouringState next = s;
    int first = rng.coin() ? 1 : 2;
    recolour_side(g, next, first, rng);
    recolour_side(g, next, first == 1 ? 2 : 1, rng);
    return next;
}

// Deterministic-order variant: the side recoloured first alternates with the
// phase instead of being drawn.
inline ColouringState scan_step(const BipartiteGraph& g, const ColouringState& s,
                                RandomSource& rng, long phase) {
    ColouringState next = s;
    int first = (phase % 2 == 0) ? 1 : 2;
    recolour_side(g, next, first, rng);
    recolour_side(g, next, first == 1 ? 2 : 1, rng);
    return next;
}

// Replayable record of one whole-graph step: the side order plus every colour
// chosen, in processing order.
struct MulticolourStepRecord {
    int first_side = 1;
    std::vector<int> choices;
    ColouringState state{1, 1};
};

inline MulticolourStepRecord multicolour_step_recorded(const BipartiteGraph& g,
                                                       const ColouringState& s,
                                                       RandomSource& rng) {
    MulticolourStepRecord rec;
    rec.state = s;
    rec.first_side = rng.coin() ? 1 : 2;
    for (int side : {rec.first_side, rec.first_side == 1 ? 2 : 1})
        for (int v : g.side_vertices(side)) {
            int c = heat_bath_colour(g, rec.state, v, rng);
            rec.choices.push_back(c);
            rec.state.set_colour(v, c);
        }
    return rec;
}

}  // namespace mixtime
