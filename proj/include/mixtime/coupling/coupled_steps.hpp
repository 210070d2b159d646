#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mixtime/chains/glauber.hpp"
#include "mixtime/chains/multicolour.hpp"
#include "mixtime/chains/random_source.hpp"
#include "mixtime/coupling/profiles.hpp"
#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

// Identity couplings: both copies attempt the same drawn transition.
inline std::pair<OccupancyState, OccupancyState> coupled_indset_step(const Hypergraph& h,
                                                                     const OccupancyState& x,
                                                                     const OccupancyState& y,
                                                                     RandomSource& rng) {
    auto p = propose_indset(h.vertex_count(), rng);
    return {apply_indset(h, x, p), apply_indset(h, y, p)};
}

inline std::pair<ColouringState, ColouringState> coupled_tricol_step(const Hypergraph& h,
                                                                     const ColouringState& x,
                                                                     const ColouringState& y,
                                                                     RandomSource& rng) {
    auto p = propose_tricol(h.vertex_count(), x.palette(), rng);
    return {apply_tricol(h, x, p), apply_tricol(h, y, p)};
}

namespace detail {

// Maximal coupling of two uniform draws over the available-colour sets:
// matched colours get the full overlap mass, the remaining mass is paired off
// greedily in ascending colour order. Unit masses live over a common
// denominator |A|*|B|, so one integer draw decides both copies. Each marginal
// stays exactly uniform and the copies agree with the largest possible
// probability, which reproduces the per-neighbour disagreement rates of the
// three adjacent-pair cases.
inline std::pair<int, int> joint_uniform_choice(const std::vector<int>& avail_x,
                                                const std::vector<int>& avail_y,
                                                RandomSource& rng) {
    long a = long(avail_x.size()), b = long(avail_y.size());
    if (a == 0 || b == 0) throw std::invalid_argument("empty available set");
    long overlap_unit = std::min(a, b);
    long r = long(rng.below(uint64_t(a * b)));

    size_t ix = 0, iy = 0;
    std::vector<int> common;
    while (ix < avail_x.size() && iy < avail_y.size()) {
        if (avail_x[ix] == avail_y[iy]) {
            common.push_back(avail_x[ix]);
            ++ix, ++iy;
        } else if (avail_x[ix] < avail_y[iy])
            ++ix;
        else
            ++iy;
    }
    for (int z : common) {
        if (r < overlap_unit) return {z, z};
        r -= overlap_unit;
    }

    auto leftover = [&](const std::vector<int>& avail, long unit) {
        std::vector<std::pair<int, long>> out;
        size_t ic = 0;
        for (int c : avail) {
            bool in_common = ic < common.size() && common[ic] == c;
            if (in_common) ++ic;
            long mass = unit - (in_common ? overlap_unit : 0);
            if (mass > 0) out.push_back({c, mass});
        }
        return out;
    };
    auto lx = leftover(avail_x, b);
    auto ly = leftover(avail_y, a);
    size_t px = 0, py = 0;
    while (px < lx.size() && py < ly.size()) {
        long m = std::min(lx[px].second, ly[py].second);
        if (r < m) return {lx[px].first, ly[py].first};
        r -= m;
        lx[px].second -= m;
        ly[py].second -= m;
        if (lx[px].second == 0) ++px;
        if (ly[py].second == 0) ++py;
    }
    throw std::logic_error("joint draw fell through");
}

inline std::vector<int> available_colours(const BipartiteGraph& g, const ColouringState& s,
                                          int v) {
    auto blocked = blocked_colours(g, s, v);
    std::vector<int> out;
    for (int c = 1; c <= s.palette(); ++c)
        if (!blocked[size_t(c)]) out.push_back(c);
    return out;
}

}  // namespace detail

// Whole-graph coupled step for an arbitrary pair: shared side order, then a
// maximal per-vertex coupling of the two heat-bath draws.
inline std::pair<ColouringState, ColouringState> coupled_multicolour_step_general(
    const BipartiteGraph& g, const ColouringState& x, const ColouringState& y,
    RandomSource& rng) {
    ColouringState nx = x, ny = y;
    int first = rng.coin() ? 1 : 2;
    for (int side : {first, first == 1 ? 2 : 1})
        for (int v : g.side_vertices(side)) {
            auto ax = detail::available_colours(g, nx, v);
            auto ay = detail::available_colours(g, ny, v);
            auto [cx, cy] = detail::joint_uniform_choice(ax, ay, rng);
            nx.set_colour(v, cx);
            ny.set_colour(v, cy);
        }
    return {nx, ny};
}

// The adjacent-pair coupling from the contraction argument; inputs further
// apart must be decomposed along the path metric by the caller.
inline std::pair<ColouringState, ColouringState> coupled_multicolour_step(
    const BipartiteGraph& g, const ColouringState& x, const ColouringState& y,
    RandomSource& rng) {
    if (x != y) change_vertex(x, y);  // throws unless exactly one vertex differs
    return coupled_multicolour_step_general(g, x, y, rng);
}

inline std::pair<ColouringState, ColouringState> coupled_scan_step(const BipartiteGraph& g,
                                                                   const ColouringState& x,
                                                                   const ColouringState& y,
                                                                   RandomSource& rng,
                                                                   long phase) {
    ColouringState nx = x, ny = y;
    int first = (phase % 2 == 0) ? 1 : 2;
    for (int side : {first, first == 1 ? 2 : 1})
        for (int v : g.side_vertices(side)) {
            auto ax = detail::available_colours(g, nx, v);
            auto ay = detail::available_colours(g, ny, v);
            auto [cx, cy] = detail::joint_uniform_choice(ax, ay, rng);
            nx.set_colour(v, cx);
            ny.set_colour(v, cy);
        }
    return {nx, ny};
}

}  // namespace mixtime
