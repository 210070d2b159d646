#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/numbers.hpp"
#include "mixtime/chains/random_source.hpp"
#include "mixtime/counting/brute.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/monotone_cnf.hpp"

namespace mixtime {

struct LevelDiagnostics {
    int level = 0;            // telescoping position, 1-based over edges
    Rational ratio = 0;       // accepted fraction at this level, exact
    double pilot_ratio = 0;
    long burn_in = 0;         // chain steps per sample
    long batches = 0;
    long batch_size = 0;
};

struct ApproxCountResult {
    Rational estimate = 0;  // 2^n times the telescoping ratios, exact arithmetic
    double epsilon = 0, delta = 0;
    long long total_samples = 0;
    long long total_steps = 0;
    std::vector<LevelDiagnostics> levels;
};

namespace detail {

// Throughput sampler for the independent-set chain on up to 64 vertices:
// one uniform draw encodes (vertex, insert-or-remove), membership is a bit.
struct BitmaskSampler {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> other_masks;  // per vertex, edges minus that vertex

    BitmaskSampler(int vertex_count, const std::vector<std::vector<int>>& edges)
        : n(vertex_count), other_masks(size_t(vertex_count)) {
        for (const auto& e : edges)
            for (int v : e) {
                std::uint64_t m = 0;
                for (int u : e)
                    if (u != v) m |= std::uint64_t(1) << (u - 1);
                other_masks[size_t(v) - 1].push_back(m);
            }
    }

    std::uint64_t advance(std::uint64_t state, long steps, RandomSource& rng) const {
        for (long t = 0; t < steps; ++t) {
            auto idx = long(rng.below(uint64_t(2 * n)));
            int v = int(idx >> 1);
            std::uint64_t bit = std::uint64_t(1) << v;
            if ((idx & 1) == 0) {
                state &= ~bit;
            } else if ((state & bit) == 0) {
                bool blocked = false;
                for (auto m : other_masks[size_t(v)])
                    if ((state & m) == m) { blocked = true; break; }
                if (!blocked) state |= bit;
            }
        }
        return state;
    }
};

}  // namespace detail

// Telescoping product estimator: add edges one at a time, estimating at each
// level the fraction of independent sets that also respect the new edge (an
// exact-arithmetic median of batch means), with sampler burn-in taken from the
// analytic mixing bound so the accuracy guarantee is inherited rather than
// heuristic.
//
// Error budget, everything union-bounded into (epsilon, delta):
//   rho   = ln(1+epsilon)/(1.05 k)        per-level relative half-width; the
//                                         product of k factors stays in 1 +- epsilon
//   a     = rho * max(1/2, pilot - 3 se)  absolute half-width; true ratios are
//                                         always >= 1/2
//   burn-in at accuracy a/8               per-sample bias <= a/8
//   batch size 256 varU / (49 a^2)        Chebyshev: batch misses by 7a/8 with
//                                         probability <= 1/4
//   batches 8 ln(2k/delta), odd           bad median needs half the batches bad:
//                                         probability <= exp(-batches/8) <= delta/(2k)
inline ApproxCountResult approx_count_indsets(const Hypergraph& h, double epsilon, double delta,
                                              uint64_t seed) {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must be in (0,1)");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0,1)");
    int n = h.vertex_count();
    if (n > 64) throw std::invalid_argument("instance too large for the sampler");

    ApproxCountResult out;
    out.epsilon = epsilon;
    out.delta = delta;
    Integer full = Integer(1) << n;
    if (h.edge_count() == 0) {
        out.estimate = Rational(full);
        return out;
    }
    if (!h.uniform_edge_size())
        throw std::invalid_argument("certified sampler needs uniform edge size");
    int m = h.min_edge_size(), max_deg = h.max_degree();
    if (f_threshold(m) <= max_deg)
        throw std::invalid_argument(
            "edge size " + std::to_string(m) + " admits max degree below " +
            rational_string(f_threshold(m)) + ", instance has " + std::to_string(max_deg) +
            "; sampler not certified rapidly mixing");

    int k = h.edge_count();
    double rho = std::log1p(epsilon) / (1.05 * k);
    long batches = long(std::ceil(8.0 * std::log(2.0 * k / delta)));
    if (batches % 2 == 0) ++batches;

    RandomSource root(seed);
    out.estimate = Rational(full);
    const auto& all_edges = h.edges();
    for (int level = 1; level <= k; ++level) {
        std::vector<std::vector<int>> prefix(all_edges.begin(), all_edges.begin() + level - 1);
        detail::BitmaskSampler sampler(n, prefix);
        std::uint64_t target = 0;
        for (int v : all_edges[size_t(level) - 1]) target |= std::uint64_t(1) << (v - 1);
        auto level_rng = root.child("level-" + std::to_string(level));

        long pilot_burn =
            long(std::ceil(indset_mixing_bound(m, max_deg, n, 0.01)));
        long pilot_n = 2000, pilot_hits = 0;
        auto pilot_rng = level_rng.child("pilot");
        for (long i = 0; i < pilot_n; ++i) {
            auto s = sampler.advance(0, pilot_burn, pilot_rng);
            if ((s & target) != target) ++pilot_hits;
        }
        double pilot = double(pilot_hits) / double(pilot_n);
        double pilot_se = std::sqrt(std::max(pilot * (1 - pilot), 0.01) / double(pilot_n));

        double a = rho * std::max(0.5, pilot - 3 * pilot_se);
        double var_upper = std::min(0.25, pilot * (1 - pilot) + 0.01);
        long batch_size = std::max(32L, long(std::ceil(256.0 * var_upper / (49.0 * a * a))));
        long burn = long(std::ceil(indset_mixing_bound(m, max_deg, n, a / 8)));

        std::vector<long> batch_hits;
        for (long bi = 0; bi < batches; ++bi) {
            auto rng = level_rng.child("batch-" + std::to_string(bi));
            long hits = 0;
            for (long s = 0; s < batch_size; ++s)
                if ((sampler.advance(0, burn, rng) & target) != target) ++hits;
            batch_hits.push_back(hits);
        }
        std::sort(batch_hits.begin(), batch_hits.end());
        long median = batch_hits[size_t(batches) / 2];
        if (median == 0) throw std::runtime_error("level ratio estimated at zero; sampling failed");

        LevelDiagnostics diag;
        diag.level = level;
        diag.ratio = Rational(median, batch_size);
        diag.pilot_ratio = pilot;
        diag.burn_in = burn;
        diag.batches = batches;
        diag.batch_size = batch_size;
        out.levels.push_back(diag);
        out.estimate *= diag.ratio;
        out.total_samples += pilot_n + batches * batch_size;
        out.total_steps += pilot_n * pilot_burn + batches * batch_size * burn;
    }
    return out;
}

// Monotone-formula counting delegates through the hypergraph view once the
// clause-size/occurrence condition admits a certified sampler.
inline ApproxCountResult approx_count_sat(const MonotoneCnf& f, double epsilon, double delta,
                                          uint64_t seed) {
    int m_min = 0, m_max = 0;
    for (const auto& c : f.clauses()) {
        int s = int(c.size());
        m_min = m_min == 0 ? s : std::min(m_min, s);
        m_max = std::max(m_max, s);
    }
    if (m_min == 0) throw std::invalid_argument("formula has no clauses; count is 2^n");
    std::vector<int> occurrences(size_t(f.variable_count()) + 1, 0);
    for (const auto& c : f.clauses())
        for (int v : c) ++occurrences[size_t(v)];
    int max_occ = *std::max_element(occurrences.begin(), occurrences.end());

    bool admissible = (m_min >= max_occ + 2) || (max_occ == 3 && m_min >= 4);
    if (!admissible)
        throw std::invalid_argument("clause size " + std::to_string(m_min) +
                                    " with max occurrences " + std::to_string(max_occ) +
                                    " is outside the certified regime");
    if (m_min != m_max)
        throw std::invalid_argument("certified sampler needs uniform clause size");
    return approx_count_indsets(from_monotone_cnf(f), epsilon, delta, seed);
}

}  // namespace mixtime
