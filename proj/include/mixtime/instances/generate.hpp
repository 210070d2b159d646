#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "mixtime/chains/random_source.hpp"
#include "mixtime/instances/bipartite_graph.hpp"
#include "mixtime/instances/hypergraph.hpp"

namespace mixtime {

// m-uniform hypergraph with max degree <= max_deg and min degree >= 1,
// deterministic for a fixed seed. A shuffled partition covers every vertex,
// then rejection sampling densifies toward the degree cap.
inline Hypergraph gen_hypergraph(int n, int m, int max_deg, std::uint64_t seed) {
    if (m < 2 || n < m || max_deg < 1) throw std::invalid_argument("infeasible parameters");
    RandomSource rng = RandomSource(seed).child("gen_hypergraph");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);

    std::vector<int> deg(n + 1, 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> edges;
    auto push = [&](std::vector<int> e) {
        std::sort(e.begin(), e.end());
        if (!seen.insert(e).second) return false;
        for (int v : e) ++deg[v];
        edges.push_back(std::move(e));
        return true;
    };

    // Cover phase: consecutive blocks of the shuffled order.
    int full = n / m;
    for (int b = 0; b < full; ++b)
        push({perm.begin() + b * m, perm.begin() + (b + 1) * m});
    int rest = n - full * m;
    if (rest > 0) {
        std::vector<int> e(perm.end() - rest, perm.end());
        // Fill up with lowest-degree vertices from the covered prefix.
        std::vector<int> covered(perm.begin(), perm.begin() + full * m);
        std::stable_sort(covered.begin(), covered.end(),
                         [&](int a, int b) { return deg[a] < deg[b]; });
        for (int v : covered) {
            if (int(e.size()) == m) break;
            if (deg[v] < max_deg) e.push_back(v);
        }
        if (int(e.size()) < m || !push(e)) throw std::invalid_argument("infeasible parameters");
    }

    // Densify toward the cap; bounded attempts keep generation deterministic.
    long target = std::max<long>(long(edges.size()), long(n) * max_deg / m * 3 / 4);
    long attempts = 0, cap = 60 * std::max<long>(target, 1);
    while (long(edges.size()) < target && attempts++ < cap) {
        std::vector<int> e;
        std::set<int> used;
        while (int(e.size()) < m) {
            int v = 1 + int(rng.below(n));
            if (used.insert(v).second) e.push_back(v);
        }
        bool ok = true;
        for (int v : e)
            if (deg[v] >= max_deg) { ok = false; break; }
        if (ok) push(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

// Bipartite graph with max degree <= max_deg, min degree >= 1 on both sides.
inline BipartiteGraph gen_bipartite(int n1, int n2, int max_deg, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1 || max_deg < 1) throw std::invalid_argument("infeasible parameters");
    if (long(n1) * max_deg < n2 || long(n2) * max_deg < n1)
        throw std::invalid_argument("infeasible parameters: a side cannot be covered");
    RandomSource rng = RandomSource(seed).child("gen_bipartite");

    std::vector<int> ldeg(n1 + 1, 0), rdeg(n2 + 1, 0);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    auto push = [&](int u, int v) {
        if (ldeg[u] >= max_deg || rdeg[v] >= max_deg) return false;
        if (!seen.insert({u, v}).second) return false;
        ++ldeg[u], ++rdeg[v];
        edges.push_back({u, v});
        return true;
    };

    // Cover the right side round-robin over a shuffled left order; degrees
    // stay within ceil(n2/n1) <= max_deg.
    std::vector<int> lorder(n1);
    std::iota(lorder.begin(), lorder.end(), 1);
    for (int i = n1 - 1; i > 0; --i)
        std::swap(lorder[i], lorder[rng.below(i + 1)]);
    for (int v = 1; v <= n2; ++v) push(lorder[(v - 1) % n1], v);

    // Cover any left vertices the first phase missed.
    for (int u = 1; u <= n1; ++u) {
        long tries = 0;
        while (ldeg[u] == 0) {
            if (tries++ < 4L * n2) {
                push(u, 1 + int(rng.below(n2)));
            } else {
                for (int v = 1; v <= n2 && ldeg[u] == 0; ++v) push(u, v);
                break;
            }
        }
        if (ldeg[u] == 0) throw std::invalid_argument("infeasible parameters");
    }

    long target = std::max<long>(long(edges.size()),
                                 std::min(long(n1), long(n2)) * max_deg * 4 / 5);
    long attempts = 0, cap = 60 * std::max<long>(target, 1);
    while (long(edges.size()) < target && attempts++ < cap)
        push(1 + int(rng.below(n1)), 1 + int(rng.below(n2)));
    return BipartiteGraph(n1, n2, std::move(edges));
}

}  // namespace mixtime
