#pragma once

#include <cmath>
#include <stdexcept>

#include "mixtime/analysis/bipartite_bounds.hpp"
#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/numbers.hpp"
#include "mixtime/analysis/tricol_weights.hpp"
#include "mixtime/coupling/coupled_steps.hpp"
#include "mixtime/coupling/metrics.hpp"

namespace mixtime {

// One-step drift of a coupled pair against its analytic threshold. Exact mode
// carries rationals with no uncertainty; Monte Carlo mode carries a mean ratio
// with a normal-approximation stderr.
struct DriftReport {
    bool exact = true;
    bool merged = false;
    bool pass = false;
    bool pass_sharp = false;
    Rational d0 = 0, d1 = 0, drift = 0, d1_bound = 0, d1_bound_sharp = 0;
    long equal_outside_edges = 0;  // colouring pairs: edges whose other endpoints share a colour
    double mean_ratio = 0, stderr_ = 0, bound_ratio = 0;
    long samples = 0;
};

// Expected next distance over all 2n equiprobable proposals, versus the
// drop of gamma * deg(w) / (2n) the weight system guarantees.
inline DriftReport exact_onestep_drift_indset(const Hypergraph& h, const OccupancyState& x,
                                              const OccupancyState& y, const IndSetWeights& wt) {
    DriftReport rep;
    if (x == y) {
        rep.merged = true;
        rep.pass = rep.pass_sharp = true;
        return rep;
    }
    int w = change_vertex(x, y);
    const OccupancyState& sigma = x.contains(w) ? y : x;
    rep.d0 = indset_adjacent_distance(h, sigma, w, wt);

    long n = h.vertex_count();
    Rational sum = 0;
    for (int v = 1; v <= n; ++v)
        for (bool insert : {false, true}) {
            IndSetProposal p{v, insert};
            sum += indset_metric(h, apply_indset(h, x, p), apply_indset(h, y, p), wt);
        }
    rep.samples = 2 * n;
    rep.d1 = sum / rep.samples;
    rep.drift = rep.d1 - rep.d0;
    rep.d1_bound = rep.d0 - wt.gamma * Rational(h.degree(w), 2 * n);
    rep.d1_bound_sharp = rep.d1_bound;
    rep.pass = rep.d1 <= rep.d1_bound;
    rep.pass_sharp = rep.pass;
    return rep;
}

// Expected next distance over all n*q proposals. Two thresholds are reported:
// the uniform factor (1 - gamma/(nq)) * d0, and the per-profile accounting
// bound d0 + (count(equal-outside edges) * d0 - gamma * deg(w)) / (nq). The
// uniform form only follows from the accounting when no edge through the
// change vertex has its other endpoints sharing a colour; pairs with such
// edges can exceed it at small palettes, so both verdicts are surfaced.
inline DriftReport exact_onestep_drift_tricol(const Hypergraph& h, const ColouringState& x,
                                              const ColouringState& y, const TriColWeights& wt) {
    DriftReport rep;
    if (x == y) {
        rep.merged = true;
        rep.pass = rep.pass_sharp = true;
        return rep;
    }
    int w = change_vertex(x, y);
    rep.d0 = tricol_adjacent_distance(h, x, y, wt);
    rep.equal_outside_edges = tricol_classify(h, x, y).counts[2];

    long n = h.vertex_count(), q = x.palette();
    Rational sum = 0;
    for (int v = 1; v <= n; ++v)
        for (int c = 1; c <= q; ++c) {
            TriColProposal p{v, c};
            sum += tricol_metric(h, apply_tricol(h, x, p), apply_tricol(h, y, p), wt);
        }
    rep.samples = n * q;
    rep.d1 = sum / rep.samples;
    rep.drift = rep.d1 - rep.d0;
    rep.d1_bound = rep.d0 * (Rational(n * q) - wt.gamma) / (n * q);
    rep.d1_bound_sharp =
        rep.d0 + (rep.equal_outside_edges * rep.d0 - wt.gamma * h.degree(w)) / Rational(n * q);
    rep.pass = rep.d1 <= rep.d1_bound;
    rep.pass_sharp = rep.d1 <= rep.d1_bound_sharp;
    return rep;
}

// Monte Carlo full-step contraction check for the whole-graph chain. The pass
// flag asserts certified contraction: the analytic factor must itself be below
// one and the observed mean ratio must sit under it (plus three stderr).
inline DriftReport mc_drift_multicolour(const BipartiteGraph& g, const ColouringState& x,
                                        const ColouringState& y, long reps, uint64_t seed) {
    if (reps < 100) throw std::invalid_argument("need at least 100 repetitions");
    DriftReport rep;
    rep.exact = false;
    rep.samples = reps;
    if (x == y) {
        rep.merged = true;
        return rep;
    }
    change_vertex(x, y);
    auto bounds = bip_bounds(x.palette(), g.max_degree());
    rep.bound_ratio = to_double(bounds.contraction_factor);
    rep.d0 = bipartite_metric(g, x, y);

    RandomSource root(seed);
    double sum = 0, sumsq = 0;
    double d0 = to_double(rep.d0);
    for (long i = 0; i < reps; ++i) {
        auto child = root.child(uint64_t(i));
        auto [nx, ny] = coupled_multicolour_step_general(g, x, y, child);
        double ratio = to_double(bipartite_metric(g, nx, ny)) / d0;
        sum += ratio;
        sumsq += ratio * ratio;
    }
    rep.mean_ratio = sum / double(reps);
    double var = (sumsq - sum * sum / double(reps)) / double(reps - 1);
    rep.stderr_ = std::sqrt(std::max(var, 0.0) / double(reps));
    rep.pass = bounds.contracts() && rep.mean_ratio <= rep.bound_ratio + 3 * rep.stderr_;
    rep.pass_sharp = rep.pass;
    return rep;
}

}  // namespace mixtime
