#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/tricol_weights.hpp"
#include "mixtime/coupling/coupled_steps.hpp"
#include "mixtime/coupling/metrics.hpp"

namespace mixtime {

// Drivers bundle an instance, its metric, and its coupled step behind one
// shape so the stopping-time machinery is chain-agnostic.
struct IndSetCoupling {
    const Hypergraph& h;
    const IndSetWeights& wt;
    using State = OccupancyState;

    Rational distance(const State& x, const State& y) const { return indset_metric(h, x, y, wt); }
    std::pair<State, State> step(const State& x, const State& y, RandomSource& rng) const {
        return coupled_indset_step(h, x, y, rng);
    }
    int vertex_count() const { return h.vertex_count(); }
};

struct TriColCoupling {
    const Hypergraph& h;
    const TriColWeights& wt;
    using State = ColouringState;

    Rational distance(const State& x, const State& y) const { return tricol_metric(h, x, y, wt); }
    std::pair<State, State> step(const State& x, const State& y, RandomSource& rng) const {
        return coupled_tricol_step(h, x, y, rng);
    }
    int vertex_count() const { return h.vertex_count(); }
};

struct MulticolourCoupling {
    const BipartiteGraph& g;
    using State = ColouringState;

    Rational distance(const State& x, const State& y) const { return bipartite_metric(g, x, y); }
    std::pair<State, State> step(const State& x, const State& y, RandomSource& rng) const {
        return coupled_multicolour_step_general(g, x, y, rng);
    }
    int vertex_count() const { return g.vertex_count(); }
};

inline long default_stopping_cap(int vertex_count, long k) { return 100L * vertex_count * k; }

// First time the coupled pair's distance moves off its starting value.
struct StoppingRun {
    long t = 0;
    double d0 = 0;
    double d_t = 0;
    bool censored = false;
    bool merged = false;
};

template <class Coupling>
inline StoppingRun stopping_time_run(const Coupling& c, typename Coupling::State x,
                                     typename Coupling::State y, long cap, RandomSource& rng) {
    if (x == y) throw std::invalid_argument("equal states have no stopping time");
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    Rational d0 = c.distance(x, y);
    StoppingRun run;
    run.d0 = to_double(d0);
    for (long t = 1; t <= cap; ++t) {
        std::tie(x, y) = c.step(x, y, rng);
        Rational d = x == y ? Rational(0) : c.distance(x, y);
        if (d != d0) {
            run.t = t;
            run.d_t = to_double(d);
            run.merged = x == y;
            return run;
        }
    }
    run.t = cap;
    run.d_t = run.d0;
    run.censored = true;
    return run;
}

struct PairStats {
    double d0 = 0;
    long runs = 0;
    double alpha_hat = 0;   // mean d_T / d0 over this pair's uncensored runs
    double mean_d_t = 0;
    double d_prime = 0;     // (1 - alpha_hat_global) * d0 + mean_d_t
};

struct StoppingStats {
    long reps = 0;
    long censored = 0;
    bool failed = false;  // every run censored
    double alpha_hat = 0, alpha_stderr = 0;
    double p_hat = 0, p_stderr = 0;
    double mean_d0 = 0, mean_d_t = 0;
    double d_prime = 0;
    std::vector<PairStats> per_pair;
};

// Estimates the contraction ratio at the stopping time and the probability the
// stopping time lands within k steps, cycling through the given start pairs.
template <class Coupling>
inline StoppingStats estimate_alpha_p(
    const Coupling& c,
    const std::vector<std::pair<typename Coupling::State, typename Coupling::State>>& pairs,
    long k, long reps, uint64_t seed, long cap = 0) {
    if (reps < 1000) throw std::invalid_argument("need at least 1000 repetitions");
    if (pairs.empty()) throw std::invalid_argument("need at least one start pair");
    if (cap <= 0) cap = default_stopping_cap(c.vertex_count(), k);

    StoppingStats st;
    st.reps = reps;
    RandomSource root(seed);
    double ratio_sum = 0, ratio_sumsq = 0;
    long ratio_count = 0, within_k = 0;
    double d0_sum = 0, dt_sum = 0;
    std::vector<double> pair_dt_sum(pairs.size(), 0), pair_ratio_sum(pairs.size(), 0);
    std::vector<long> pair_runs(pairs.size(), 0);
    std::vector<double> pair_d0(pairs.size(), 0);

    for (long i = 0; i < reps; ++i) {
        size_t which = size_t(i) % pairs.size();
        auto rng = root.child(uint64_t(i));
        auto run = stopping_time_run(c, pairs[which].first, pairs[which].second, cap, rng);
        if (run.censored) {
            ++st.censored;
            continue;
        }
        double ratio = run.d_t / run.d0;
        ratio_sum += ratio;
        ratio_sumsq += ratio * ratio;
        ++ratio_count;
        if (run.t <= k) ++within_k;
        d0_sum += run.d0;
        dt_sum += run.d_t;
        pair_dt_sum[which] += run.d_t;
        pair_ratio_sum[which] += ratio;
        pair_runs[which] += 1;
        pair_d0[which] = run.d0;
    }
    if (ratio_count == 0) {
        st.failed = true;
        return st;
    }
    st.alpha_hat = ratio_sum / double(ratio_count);
    if (ratio_count > 1) {
        double var = (ratio_sumsq - ratio_sum * ratio_sum / double(ratio_count)) /
                     double(ratio_count - 1);
        st.alpha_stderr = std::sqrt(std::max(var, 0.0) / double(ratio_count));
    }
    st.p_hat = double(within_k) / double(st.reps);
    st.p_stderr = std::sqrt(st.p_hat * (1 - st.p_hat) / double(st.reps));
    st.mean_d0 = d0_sum / double(ratio_count);
    st.mean_d_t = dt_sum / double(ratio_count);
    st.d_prime = (1 - st.alpha_hat) * st.mean_d0 + st.mean_d_t;
    for (size_t j = 0; j < pairs.size(); ++j) {
        PairStats ps;
        ps.d0 = pair_d0[j];
        ps.runs = pair_runs[j];
        if (pair_runs[j] > 0) {
            ps.alpha_hat = pair_ratio_sum[j] / double(pair_runs[j]);
            ps.mean_d_t = pair_dt_sum[j] / double(pair_runs[j]);
        }
        ps.d_prime = (1 - st.alpha_hat) * ps.d0 + ps.mean_d_t;
        st.per_pair.push_back(ps);
    }
    return st;
}

// Empirical check that the adjusted distance (1-alpha)d + E[d at the stopping
// time] contracts by 1-(1-alpha)p over k steps from a fixed start pair.
struct ContractionCheck {
    double d_prime_start = 0;
    double d_prime_at_k = 0;
    double bound = 0;
    double margin = 0;  // three stderr
    bool pass = false;
    long reps = 0;
};

template <class Coupling>
inline ContractionCheck contraction_check(const Coupling& c, const typename Coupling::State& x0,
                                          const typename Coupling::State& y0, long k, long reps,
                                          double alpha_hat, double p_hat, uint64_t seed,
                                          long cap = 0) {
    if (cap <= 0) cap = default_stopping_cap(c.vertex_count(), k);
    RandomSource root(seed);
    double d0 = to_double(c.distance(x0, y0));

    // Phase one: the adjusted distance at the start needs E[d at stopping time].
    double dt_sum = 0, dt_sumsq = 0;
    long dt_count = 0;
    for (long i = 0; i < reps; ++i) {
        auto rng = root.child(uint64_t(i));
        auto run = stopping_time_run(c, x0, y0, cap, rng);
        if (run.censored) continue;
        dt_sum += run.d_t;
        dt_sumsq += run.d_t * run.d_t;
        ++dt_count;
    }
    ContractionCheck ck;
    ck.reps = reps;
    if (dt_count == 0) return ck;
    double dt_mean = dt_sum / double(dt_count);
    double dt_var =
        dt_count > 1 ? (dt_sumsq - dt_sum * dt_sum / double(dt_count)) / double(dt_count - 1) : 0;
    ck.d_prime_start = (1 - alpha_hat) * d0 + dt_mean;

    // Phase two: run k plain steps, then continue to the next distance change.
    double sum = 0, sumsq = 0;
    for (long i = 0; i < reps; ++i) {
        auto rng = root.child(uint64_t(reps + i));
        auto x = x0, y = y0;
        for (long t = 0; t < k; ++t) std::tie(x, y) = c.step(x, y, rng);
        double sample = 0;
        if (x != y) {
            double dk = to_double(c.distance(x, y));
            auto run = stopping_time_run(c, x, y, cap, rng);
            double dt = run.censored ? dk : run.d_t;
            sample = (1 - alpha_hat) * dk + dt;
        }
        sum += sample;
        sumsq += sample * sample;
    }
    ck.d_prime_at_k = sum / double(reps);
    double var = reps > 1 ? (sumsq - sum * sum / double(reps)) / double(reps - 1) : 0;
    double se = std::sqrt(std::max(var, 0.0) / double(reps)) +
                std::sqrt(std::max(dt_var, 0.0) / double(dt_count));
    ck.bound = (1 - (1 - alpha_hat) * p_hat) * ck.d_prime_start;
    ck.margin = 3 * se;
    ck.pass = ck.d_prime_at_k <= ck.bound + ck.margin;
    return ck;
}

// Empirical tail of the stopping time against the geometric bound (1-p)^floor(t/k).
struct TailReport {
    std::vector<long> thresholds;
    std::vector<double> empirical;
    std::vector<double> bound;
    std::vector<double> stderr_;
    long reps = 0;
    bool pass = true;
};

template <class Coupling>
inline TailReport tail_bound_check(const Coupling& c, const typename Coupling::State& x0,
                                   const typename Coupling::State& y0, long k, double p_hat,
                                   long horizon, long reps, uint64_t seed) {
    TailReport rep;
    rep.reps = reps;
    std::vector<long> times;
    RandomSource root(seed);
    for (long i = 0; i < reps; ++i) {
        auto rng = root.child(uint64_t(i));
        auto run = stopping_time_run(c, x0, y0, horizon + 1, rng);
        times.push_back(run.censored ? horizon + 1 : run.t);
    }
    for (long t = k; t <= horizon; t += k) {
        long exceed = 0;
        for (long T : times)
            if (T > t) ++exceed;
        double frac = double(exceed) / double(reps);
        double se = std::sqrt(frac * (1 - frac) / double(reps));
        rep.thresholds.push_back(t);
        rep.empirical.push_back(frac);
        rep.bound.push_back(std::pow(1 - p_hat, double(t / k)));
        rep.stderr_.push_back(se);
        if (frac > rep.bound.back() + 3 * se) rep.pass = false;
    }
    return rep;
}

// Steps until the coupled copies coincide, from fixed starts.
struct CoalescenceStats {
    std::vector<long> times;  // coalesced runs only
    long reps = 0;
    long censored = 0;
    double mean = 0;
    double median = 0;
    long max = 0;
};

template <class Coupling>
inline CoalescenceStats coalescence_time(const Coupling& c, const typename Coupling::State& x0,
                                         const typename Coupling::State& y0, long reps, long cap,
                                         uint64_t seed) {
    CoalescenceStats st;
    st.reps = reps;
    RandomSource root(seed);
    for (long i = 0; i < reps; ++i) {
        auto rng = root.child(uint64_t(i));
        auto x = x0, y = y0;
        long t = 0;
        while (x != y && t < cap) {
            std::tie(x, y) = c.step(x, y, rng);
            ++t;
        }
        if (x != y) {
            ++st.censored;
            continue;
        }
        st.times.push_back(t);
    }
    if (!st.times.empty()) {
        long sum = 0;
        for (long t : st.times) {
            sum += t;
            st.max = std::max(st.max, t);
        }
        st.mean = double(sum) / double(st.times.size());
        auto sorted = st.times;
        std::sort(sorted.begin(), sorted.end());
        st.median = double(sorted[sorted.size() / 2]);
    }
    return st;
}

// Constant colouring, handy as a maximally disagreeing start.
inline ColouringState constant_colouring(int vertex_count, int palette, int colour) {
    ColouringState s(vertex_count, palette);
    for (int v = 1; v <= vertex_count; ++v) s.set_colour(v, colour);
    return s;
}

}  // namespace mixtime
