#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mixtime/analysis/numbers.hpp"

namespace mixtime {

// Exact enumeration oracle for the available-colour bounds. Each neighbour i
// draws s_i uniformly from its allowed set S_i; the sets must all avoid one
// common blocked colour and satisfy |S_i| >= q - max_deg, which is what makes
// the bounds hold (without a shared blocked colour, degree-many disjoint lists
// can pin the used-colour count at max_deg surely). With s_1 pinned to q1, the
// oracle returns E[q - c] and E[1/(q - c)] for c = |{s_1, ..., s_D}| by
// walking the full tuple space.
struct ColourOracleResult {
    Rational expect_available;   // E[q - c | s_1 = q1]
    Rational expect_reciprocal;  // E[1/(q - c) | s_1 = q1]
    long tuples = 0;
};

inline ColourOracleResult available_colour_oracle(int q, int max_deg,
                                      const std::vector<std::vector<int>>& sets, int q1) {
    if (int(sets.size()) != max_deg)
        throw std::invalid_argument("need exactly max_deg neighbour sets");
    long tuple_count = 1;
    for (const auto& s : sets) {
        if (int(s.size()) < q - max_deg)
            throw std::invalid_argument("neighbour set smaller than q - max_deg");
        for (int col : s)
            if (col < 1 || col > q) throw std::invalid_argument("colour out of range");
        if (&s != &sets.front()) {
            tuple_count *= long(s.size());
            if (tuple_count > 10'000'000) throw std::invalid_argument("tuple space too large");
        }
    }
    if (std::find(sets[0].begin(), sets[0].end(), q1) == sets[0].end())
        throw std::invalid_argument("q1 must lie in the first set");
    std::vector<bool> seen(size_t(q) + 1, false);
    for (const auto& s : sets)
        for (int col : s) seen[size_t(col)] = true;
    if (std::find(seen.begin() + 1, seen.end(), false) == seen.end())
        throw std::invalid_argument("some colour must be blocked for every neighbour");

    std::vector<int> idx(max_deg, 0);
    ColourOracleResult out;
    Rational sum_avail = 0, sum_recip = 0;

    // Odometer over s_2..s_D with s_1 = q1 fixed.
    long total = 0;
    for (;;) {
        std::vector<bool> used(q + 1, false);
        used[q1] = true;
        int c = 1;
        for (int i = 1; i < max_deg; ++i) {
            int s = sets[i][idx[i]];
            if (!used[s]) { used[s] = true; ++c; }
        }
        sum_avail += q - c;
        sum_recip += Rational(1, q - c);
        ++total;

        int pos = max_deg - 1;
        while (pos >= 1 && ++idx[pos] == int(sets[pos].size())) idx[pos--] = 0;
        if (pos < 1) break;
    }
    out.tuples = total;
    out.expect_available = sum_avail / total;
    out.expect_reciprocal = sum_recip / total;
    return out;
}

}  // namespace mixtime
