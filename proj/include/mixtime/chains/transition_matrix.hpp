#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "mixtime/chains/glauber.hpp"
#include "mixtime/instances/hypergraph.hpp"
#include "mixtime/instances/states.hpp"

namespace mixtime {

enum class ChainKind { indset, tricol, multicolour, scan };

struct ChainSpec {
    ChainKind kind = ChainKind::indset;
    int palette = 0;  // colouring chains only
};

// Row-stochastic kernel stored as integer counts over a common denominator
// (the proposal count), so stochasticity and stationarity checks are exact.
struct SparseKernel {
    long denominator = 1;
    std::vector<std::map<int, long>> rows;

    int size() const { return int(rows.size()); }
};

inline constexpr int kMaxEnumeratedStates = 4096;

// All independent sets, sorted by occupancy-vector order.
inline std::vector<OccupancyState> enumerate_indsets(const Hypergraph& h) {
    int n = h.vertex_count();
    if (n > 22) throw std::invalid_argument("state space too large");
    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : h.edges()) {
        std::uint32_t m = 0;
        for (int v : e) m |= std::uint32_t(1) << (v - 1);
        edge_masks.push_back(m);
    }
    std::vector<OccupancyState> out;
    for (std::uint32_t mask = 0;; ++mask) {
        bool ok = true;
        for (auto em : edge_masks)
            if ((mask & em) == em) { ok = false; break; }
        if (ok) {
            if (int(out.size()) >= kMaxEnumeratedStates)
                throw std::invalid_argument("state space too large");
            OccupancyState s(n);
            for (int v = 1; v <= n; ++v)
                if (mask & (std::uint32_t(1) << (v - 1))) s.insert(v);
            out.push_back(std::move(s));
        }
        if (mask == (std::uint32_t(1) << n) - 1) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All proper colourings, in lexicographic colour order.
inline std::vector<ColouringState> enumerate_proper_colourings(const Hypergraph& h, int palette) {
    int n = h.vertex_count();
    double space = 1;
    for (int v = 0; v < n; ++v) {
        space *= palette;
        if (space > 1e7) throw std::invalid_argument("state space too large");
    }
    std::vector<ColouringState> out;
    ColouringState s(n, palette);
    std::vector<int> col(size_t(n) + 1, 1);
    for (;;) {
        for (int v = 1; v <= n; ++v) s.set_colour(v, col[size_t(v)]);
        if (is_proper(h, s)) {
            if (int(out.size()) >= kMaxEnumeratedStates)
                throw std::invalid_argument("state space too large");
            out.push_back(s);
        }
        int v = n;
        while (v >= 1 && col[size_t(v)] == palette) col[size_t(v--)] = 1;
        if (v < 1) break;
        ++col[size_t(v)];
    }
    return out;
}

template <class State>
inline int state_index(const std::vector<State>& states, const State& s) {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || !(*it == s)) throw std::logic_error("state not in enumeration");
    return int(it - states.begin());
}

// Exact kernel of the independent-set chain: 2n equiprobable proposals per row.
inline SparseKernel indset_kernel(const Hypergraph& h, const std::vector<OccupancyState>& states) {
    int n = h.vertex_count();
    SparseKernel k;
    k.denominator = 2L * n;
    k.rows.resize(states.size());
    for (size_t i = 0; i < states.size(); ++i)
        for (int v = 1; v <= n; ++v)
            for (bool insert : {false, true}) {
                auto next = apply_indset(h, states[i], {v, insert});
                k.rows[i][state_index(states, next)] += 1;
            }
    return k;
}

// Exact kernel of the colouring chain: n*q equiprobable proposals per row.
inline SparseKernel tricol_kernel(const Hypergraph& h, int palette,
                                  const std::vector<ColouringState>& states) {
    int n = h.vertex_count();
    SparseKernel k;
    k.denominator = long(n) * palette;
    k.rows.resize(states.size());
    for (size_t i = 0; i < states.size(); ++i)
        for (int v = 1; v <= n; ++v)
            for (int c = 1; c <= palette; ++c) {
                auto next = apply_tricol(h, states[i], {v, c});
                k.rows[i][state_index(states, next)] += 1;
            }
    return k;
}

struct TransitionMatrixResult {
    ChainKind kind = ChainKind::indset;
    SparseKernel kernel;
    std::vector<OccupancyState> indset_states;
    std::vector<ColouringState> colouring_states;
};

inline TransitionMatrixResult exact_transition_matrix(const ChainSpec& spec,
                                                      const Hypergraph& h) {
    TransitionMatrixResult out;
    out.kind = spec.kind;
    switch (spec.kind) {
        case ChainKind::indset:
            out.indset_states = enumerate_indsets(h);
            out.kernel = indset_kernel(h, out.indset_states);
            return out;
        case ChainKind::tricol:
            out.colouring_states = enumerate_proper_colourings(h, spec.palette);
            out.kernel = tricol_kernel(h, spec.palette, out.colouring_states);
            return out;
        default:
            throw std::invalid_argument(
                "whole-graph chains have no tractably enumerable transition distribution");
    }
}

inline bool is_row_stochastic(const SparseKernel& k) {
    for (const auto& row : k.rows) {
        long sum = 0;
        for (auto [j, c] : row) sum += c;
        if (sum != k.denominator) return false;
    }
    return true;
}

inline bool is_symmetric(const SparseKernel& k) {
    for (int i = 0; i < k.size(); ++i)
        for (auto [j, c] : k.rows[size_t(i)]) {
            auto& other = k.rows[size_t(j)];
            auto it = other.find(i);
            if (it == other.end() || it->second != c) return false;
        }
    return true;
}

// Max deviation of the uniform vector from being a left fixed point, measured
// entrywise on the column sums; an exactly doubly stochastic kernel gives 0.
inline double stationarity_error(const SparseKernel& k) {
    std::vector<long> colsum(size_t(k.size()), 0);
    for (const auto& row : k.rows)
        for (auto [j, c] : row) colsum[size_t(j)] += c;
    double worst = 0;
    for (long s : colsum)
        worst = std::max(worst, std::abs(double(s - k.denominator)) / double(k.denominator));
    return worst / double(k.size());
}

}  // namespace mixtime
