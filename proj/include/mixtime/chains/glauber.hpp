#pragma once

#include <vector>

#include "mixtime/chains/random_source.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

// Single-site dynamics on hypergraph independent sets: pick a vertex uniformly,
// flip a fair coin between a removal attempt and an insertion attempt, and
// apply the move only when the result stays independent.
struct IndSetProposal {
    int vertex = 0;
    bool insert = false;
};

inline IndSetProposal propose_indset(int vertex_count, RandomSource& rng) {
    IndSetProposal p;
    p.vertex = 1 + int(rng.below(uint64_t(vertex_count)));
    p.insert = rng.coin();
    return p;
}

inline OccupancyState apply_indset(const Hypergraph& h, const OccupancyState& s,
                                   const IndSetProposal& p) {
    OccupancyState next = s;
    if (p.insert) {
        if (!s.contains(p.vertex) && insertion_independent(h, s, p.vertex))
            next.insert(p.vertex);
    } else {
        next.erase(p.vertex);
    }
    return next;
}

inline OccupancyState glauber_indset_step(const Hypergraph& h, const OccupancyState& s,
                                          RandomSource& rng) {
    return apply_indset(h, s, propose_indset(h.vertex_count(), rng));
}

// Single-site dynamics on proper colourings: pick (vertex, colour) uniformly
// and recolour only when the result stays proper.
struct TriColProposal {
    int vertex = 0;
    int colour = 0;
};

inline TriColProposal propose_tricol(int vertex_count, int palette, RandomSource& rng) {
    TriColProposal p;
    p.vertex = 1 + int(rng.below(uint64_t(vertex_count)));
    p.colour = 1 + int(rng.below(uint64_t(palette)));
    return p;
}

inline ColouringState apply_tricol(const Hypergraph& h, const ColouringState& s,
                                   const TriColProposal& p) {
    ColouringState next = s;
    next.set_colour(p.vertex, p.colour);
    if (!recolour_proper(h, s, p.vertex, p.colour)) return s;
    return next;
}

inline ColouringState glauber_tricol_step(const Hypergraph& h, const ColouringState& s,
                                          RandomSource& rng) {
    return apply_tricol(h, s, propose_tricol(h.vertex_count(), s.palette(), rng));
}

// Trajectory records: the drawn randomness plus the resulting state, enough to
// replay a run move by move.
struct IndSetStepRecord {
    IndSetProposal proposal;
    OccupancyState state;
};

struct TriColStepRecord {
    TriColProposal proposal;
    ColouringState state;
};

inline std::vector<IndSetStepRecord> run_indset(const Hypergraph& h, OccupancyState s,
                                                long steps, RandomSource& rng) {
    std::vector<IndSetStepRecord> out;
    out.reserve(size_t(steps));
    for (long t = 0; t < steps; ++t) {
        auto p = propose_indset(h.vertex_count(), rng);
        s = apply_indset(h, s, p);
        out.push_back({p, s});
    }
    return out;
}

inline std::vector<TriColStepRecord> run_tricol(const Hypergraph& h, ColouringState s,
                                                long steps, RandomSource& rng) {
    std::vector<TriColStepRecord> out;
    out.reserve(size_t(steps));
    for (long t = 0; t < steps; ++t) {
        auto p = propose_tricol(h.vertex_count(), s.palette(), rng);
        s = apply_tricol(h, s, p);
        out.push_back({p, s});
    }
    return out;
}

// Greedy proper colouring used as a canonical start; exists whenever the
// palette exceeds the maximum degree.
inline ColouringState greedy_colouring(const Hypergraph& h, int palette) {
    ColouringState s(h.vertex_count(), palette);
    for (int v = 1; v <= h.vertex_count(); ++v) {
        for (int c = 1; c <= palette; ++c) {
            if (recolour_proper(h, s, v, c)) {
                s.set_colour(v, c);
                break;
            }
        }
    }
    if (!is_proper(h, s)) throw std::invalid_argument("greedy colouring failed; palette too small");
    return s;
}

}  // namespace mixtime
