#pragma once

// End-to-end acceptance checks: each criterion exercises a slice of the
// library against frozen expected values or independent oracles and returns
// one verdict plus a readable evidence block. Shared by the standalone
// runner and the `verify` subcommand.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mixtime/analysis/bipartite_bounds.hpp"
#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/available_colour_oracle.hpp"
#include "mixtime/analysis/stats.hpp"
#include "mixtime/analysis/tricol_weights.hpp"
#include "mixtime/chains/glauber.hpp"
#include "mixtime/chains/multicolour.hpp"
#include "mixtime/chains/random_source.hpp"
#include "mixtime/chains/transition_matrix.hpp"
#include "mixtime/counting/approx.hpp"
#include "mixtime/counting/brute.hpp"
#include "mixtime/coupling/coupled_steps.hpp"
#include "mixtime/coupling/drift.hpp"
#include "mixtime/coupling/pairs.hpp"
#include "mixtime/coupling/stopping.hpp"
#include "mixtime/instances/generate.hpp"
#include "mixtime/instances/io.hpp"

namespace mixtime::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool documented_failure = false;  // failing is the recorded outcome; see detail
    double seconds = 0;
    std::string detail;
};

inline std::vector<int> suite_ids(const std::string& suite) {
    if (suite == "quick") return {2, 3, 4, 5, 7, 8, 9};
    if (suite == "full") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    throw std::invalid_argument("unknown suite '" + suite + "' (quick|full)");
}

namespace detail {

// The published minimum-palette table for the whole-graph chain.
inline const std::vector<std::pair<int, int>>& published_palette_rows() {
    static const std::vector<std::pair<int, int>> rows = {
        {9, 17},  {10, 19}, {11, 21}, {12, 23}, {13, 25}, {14, 26}, {15, 28}, {16, 30}, {17, 32},
        {18, 33}, {19, 35}, {20, 37}, {21, 39}, {22, 40}, {23, 42}, {24, 44}, {25, 46}, {26, 48},
        {27, 49}, {28, 51}, {29, 53}, {30, 55}, {31, 56}, {32, 58}, {33, 60}, {34, 61}, {35, 63},
        {36, 65}, {37, 67}, {38, 68}, {39, 70}, {40, 72}, {41, 74}, {42, 75}, {43, 77}, {44, 79},
        {45, 81}, {46, 83}, {47, 84}, {48, 86}, {49, 88}, {50, 90}, {10000, 17634}};
    return rows;
}

inline int ceil_11_6(int d) { return (11 * d + 5) / 6; }

inline std::string fmt(double x, int prec = 6) {
    std::ostringstream ss;
    ss.precision(prec);
    ss << x;
    return ss.str();
}

inline std::vector<std::filesystem::path> corpus_files(const std::string& data_dir,
                                                       const std::string& ext) {
    std::vector<std::filesystem::path> out;
    std::filesystem::path dir(data_dir);
    if (!std::filesystem::is_directory(dir))
        throw std::invalid_argument("instance directory not found: " + data_dir);
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ext)
            out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

template <class T>
inline T parse_file(const std::filesystem::path& p, T (*parser)(std::istream&)) {
    std::ifstream in(p);
    if (!in) throw std::invalid_argument("cannot open " + p.string());
    return parser(in);
}

// Two-sample homogeneity test for equal-size samples binned over a shared key.
template <class Key>
inline ChiSquareTest homogeneity(const std::map<Key, long>& a, const std::map<Key, long>& b) {
    std::vector<Key> keys;
    for (auto& [k, v] : a) keys.push_back(k);
    for (auto& [k, v] : b)
        if (!a.count(k)) keys.push_back(k);
    double stat = 0;
    long bins = 0;
    for (const auto& k : keys) {
        auto ita = a.find(k);
        auto itb = b.find(k);
        double o1 = ita == a.end() ? 0 : double(ita->second);
        double o2 = itb == b.end() ? 0 : double(itb->second);
        if (o1 + o2 == 0) continue;
        stat += (o1 - o2) * (o1 - o2) / (o1 + o2);
        ++bins;
    }
    ChiSquareTest t;
    t.statistic = stat;
    t.dof = bins - 1;
    t.pvalue = bins > 1 ? chi_square_pvalue(stat, t.dof) : 1.0;
    return t;
}

}  // namespace detail

// 1. The published minimum-palette table, all 43 rows, under both readings of
// the change-vertex reciprocal bound.
inline CriterionResult criterion_published_palette_table() {
    CriterionResult r;
    r.name = "published-palette-table";
    r.documented_failure = true;
    std::ostringstream out;
    bool any_variant_clean = false;
    for (auto variant : {AlphaPrimeVVariant::printed, AlphaPrimeVVariant::symmetric}) {
        const char* vname = variant == AlphaPrimeVVariant::printed ? "printed" : "symmetric";
        std::vector<std::string> mismatches;
        for (auto [d, q_published] : detail::published_palette_rows()) {
            int q_computed = min_q_for_contraction(d, 50, variant);
            if (q_computed != q_published)
                mismatches.push_back("degree " + std::to_string(d) + ": published " +
                                     std::to_string(q_published) + ", computed " +
                                     std::to_string(q_computed));
        }
        out << "variant " << vname << ": " << (43 - mismatches.size()) << "/43 rows match\n";
        for (const auto& m : mismatches) out << "  " << m << "\n";
        if (mismatches.empty()) any_variant_clean = true;
    }
    r.pass = any_variant_clean;
    if (!r.pass)
        out << "the mismatching rows sit one palette below the computed contraction threshold\n"
            << "under either reading; the bound factor evaluated at the published palette is\n"
            << "above 1 at 100-digit precision, so the published entries for those degrees are\n"
            << "not reproducible from the stated formulas; computed values are the certified\n"
            << "ones and satisfy the ceiling bound checked separately\n";
    r.detail = out.str();
    return r;
}

// 2. Computed palette thresholds against the ceiling bound 11*degree/6.
inline CriterionResult criterion_palette_threshold_bound() {
    CriterionResult r;
    r.name = "palette-threshold-bound";
    std::ostringstream out;
    bool ok = true;
    for (int d = 14; d <= 50; ++d) {
        int q = min_q_for_contraction(d);
        int cap = detail::ceil_11_6(d);
        bool row_ok = q <= cap && (d < 31 || q < cap);
        if (!row_ok) {
            ok = false;
            out << "degree " << d << ": computed " << q << " vs ceiling " << cap << "\n";
        }
        if (d == 22 && q != 40) {
            ok = false;
            out << "degree 22: expected threshold 40, computed " << q << "\n";
        }
    }
    if (ok)
        out << "threshold <= ceil(11d/6) for degrees 14..50, strictly below for 31..50,\n"
            << "and the degree-22 threshold equals 40\n";
    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 3. Asymptotic palette ratio: the fixed point of (1/b) e^(1/b) = 1 and the
// degree-10000 threshold ratio.
inline CriterionResult criterion_asymptotic_ratio() {
    CriterionResult r;
    r.name = "asymptotic-palette-ratio";
    std::ostringstream out;
    PrecisionGuard guard(40);
    Real beta = solve_beta(30);
    Real x = 1 / beta;
    Real residual = x * exp(x) - 1;
    if (residual < 0) residual = -residual;
    double beta_d = to_double(beta);
    bool two_dp = std::fabs(beta_d - 1.76) < 0.005;
    bool ident = residual < Real("1e-10");
    int q10000 = min_q_for_contraction(10000);
    double ratio = double(q10000) / 10000.0;
    bool tail = std::fabs(ratio - 1.7634) <= 0.0001;
    out << "beta = " << detail::fmt(beta_d, 12) << " (2dp target 1.76: " << (two_dp ? "yes" : "no")
        << ")\n"
        << "fixed-point residual |x e^x - 1| = " << detail::fmt(to_double(residual), 3)
        << " (<= 1e-10: " << (ident ? "yes" : "no") << ")\n"
        << "threshold(10000)/10000 = " << detail::fmt(ratio, 6) << " (target 1.7634 +- 0.0001: "
        << (tail ? "yes" : "no") << ")\n";
    r.pass = two_dp && ident && tail;
    r.detail = out.str();
    return r;
}

// 4. The edge-size threshold function at small sizes and its first crossing
// above each degree.
inline CriterionResult criterion_edge_size_thresholds() {
    CriterionResult r;
    r.name = "edge-size-thresholds";
    std::ostringstream out;
    bool ok = f_threshold(2) == 2 && f_threshold(3) == Rational(5, 2) &&
              f_threshold(4) == Rational(34, 11);
    out << "f(2) = " << rational_string(f_threshold(2)) << ", f(3) = "
        << rational_string(f_threshold(3)) << ", f(4) = " << rational_string(f_threshold(4))
        << "\n";
    // For edge sizes >= 5 the fractional term drops below one, so the threshold
    // boundary is exactly m = d + 2; edge size 4 additionally clears degree 3
    // (f(4) = 34/11 > 3), which the sweep checks as the lone small-m extra.
    for (int d = 3; d <= 14; ++d) {
        int first = 0;
        for (int m = 5; m <= d + 3; ++m)
            if (f_threshold(m) > d) {
                first = m;
                break;
            }
        if (first != d + 2) {
            ok = false;
            out << "degree " << d << ": first edge size >= 5 with f(m) > d is " << first
                << ", expected " << d + 2 << "\n";
        }
    }
    if (f_threshold(4) <= 3) {
        ok = false;
        out << "expected f(4) > 3\n";
    }
    for (int m = 2; m <= 3; ++m)
        if (f_threshold(m) > 3) {
            ok = false;
            out << "expected f(" << m << ") <= 3\n";
        }
    if (ok)
        out << "first edge size >= 5 with f(m) > d equals d+2 for degrees 3..14;\n"
               "edge size 4 clears degree 3 and edge sizes 2..3 do not\n";
    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 5. Exact weight systems: zero residuals, monotonicity, positivity across the
// full admissible sweep.
inline CriterionResult criterion_weight_systems() {
    CriterionResult r;
    r.name = "weight-system-residuals";
    std::ostringstream out;
    bool ok = true;
    long indset_count = 0, tricol_count = 0;
    for (int m = 2; m <= 16; ++m)
        for (int d = 1; f_threshold(m) > d; ++d) {
            auto w = indset_weights(m, d);
            auto rep = verify_indset_recurrence(w);
            if (!rep.ok() || w.gamma <= 0) {
                ok = false;
                out << "occupancy weights (m=" << m << ", d=" << d << ") failed\n";
            }
            ++indset_count;
        }
    for (int d = 1; d <= 20; ++d) {
        int q = tricol_min_q(d);
        auto w = tricol_weights(q, d);
        auto rep = verify_tricol_system(w);
        if (!rep.ok() || w.gamma < 0) {
            ok = false;
            out << "colouring weights (q=" << q << ", d=" << d << ") failed\n";
        }
        ++tricol_count;
    }
    out << indset_count << " occupancy systems and " << tricol_count
        << " colouring systems solved with zero residuals\n";
    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 6. One-step drift oracles over generated instances: exact expected-distance
// change for every tested adjacent pair against the per-family inequalities.
inline CriterionResult criterion_drift_oracles() {
    CriterionResult r;
    r.name = "one-step-drift-oracles";
    r.documented_failure = true;
    std::ostringstream out;

    // Occupancy family: the uniform inequality is sound for every pair.
    const std::vector<std::pair<int, int>> occ_params = {{2, 1}, {3, 2}, {4, 2},
                                                         {4, 3}, {5, 3}, {6, 4}};
    const std::vector<int> occ_sizes = {8, 16, 24, 32, 40};
    long occ_pairs = 0, occ_violations = 0;
    for (int i = 0; i < 200; ++i) {
        auto [m, d] = occ_params[size_t(i) % occ_params.size()];
        int n = occ_sizes[(size_t(i) / occ_params.size()) % occ_sizes.size()];
        auto h = gen_hypergraph(n, m, d, 4000 + uint64_t(i));
        auto wt = indset_weights(m, d);
        RandomSource rng(9100 + uint64_t(i));
        std::vector<std::pair<OccupancyState, OccupancyState>> tested;
        OccupancyState empty(n);
        for (int w : h.edge(0)) {
            auto other = empty;
            other.insert(w);
            tested.push_back({empty, other});
        }
        for (int s = 0; s < 4; ++s) tested.push_back(random_adjacent_indset_pair(h, rng));
        for (const auto& [x, y] : tested) {
            auto rep = exact_onestep_drift_indset(h, x, y, wt);
            ++occ_pairs;
            if (!rep.pass) ++occ_violations;
        }
    }
    out << "occupancy family: " << occ_pairs << " adjacent pairs over 200 instances, "
        << occ_violations << " violations of E[d1-d0] <= -gamma*deg(w)/(2n)\n";

    // Colouring family: test the uniform form and the corrected form recording
    // edges whose other endpoints share a colour.
    const std::vector<std::pair<int, int>> col_params = {{2, 4}, {3, 6}};  // (degree, palette)
    const std::vector<int> col_sizes = {6, 9, 12, 18, 24, 30};
    long col_pairs = 0, col_uniform_violations = 0, col_sharp_violations = 0, col_eo_pairs = 0;
    Rational worst_excess = 0;
    std::string worst_desc;
    for (int i = 0; i < 200; ++i) {
        auto [d, q] = col_params[size_t(i) % col_params.size()];
        int n = col_sizes[(size_t(i) / col_params.size()) % col_sizes.size()];
        auto h = gen_hypergraph(n, 3, d, 5000 + uint64_t(i));
        auto wt = tricol_weights(q, d);
        RandomSource rng(9200 + uint64_t(i));
        std::vector<std::pair<ColouringState, ColouringState>> tested;
        auto z = greedy_colouring(h, q);
        int w = h.edge(0)[0];
        for (int a = 1; a <= q; ++a) {
            if (!recolour_proper(h, z, w, a)) continue;
            for (int b = a + 1; b <= q; ++b) {
                if (!recolour_proper(h, z, w, b)) continue;
                auto x = z, y = z;
                x.set_colour(w, a);
                y.set_colour(w, b);
                tested.push_back({x, y});
            }
        }
        for (int s = 0; s < 4; ++s) tested.push_back(random_adjacent_tricol_pair(h, q, rng));
        for (const auto& [x, y] : tested) {
            auto rep = exact_onestep_drift_tricol(h, x, y, wt);
            ++col_pairs;
            if (rep.equal_outside_edges > 0) ++col_eo_pairs;
            if (!rep.pass) {
                ++col_uniform_violations;
                Rational excess = rep.d1 - rep.d1_bound;
                if (excess > worst_excess) {
                    worst_excess = excess;
                    worst_desc = "n=" + std::to_string(h.vertex_count()) +
                                 ", q=" + std::to_string(q) + ", equal-outside edges " +
                                 std::to_string(rep.equal_outside_edges) + ", E[d1] - bound = " +
                                 rational_string(excess);
                }
            }
            if (!rep.pass_sharp) ++col_sharp_violations;
        }
    }
    out << "colouring family: " << col_pairs << " adjacent pairs over 200 instances ("
        << col_eo_pairs << " with an equal-outside edge)\n"
        << "  uniform form E[d1] <= (1 - gamma/(nq)) d0: " << col_uniform_violations
        << " violations\n"
        << "  corrected form nq E[d1-d0] <= -gamma*deg(w) + (equal-outside edges)*d0: "
        << col_sharp_violations << " violations\n";
    if (!worst_desc.empty()) out << "  largest uniform excess: " << worst_desc << "\n";

    r.pass = occ_violations == 0 && col_uniform_violations == 0 && col_sharp_violations == 0;
    if (col_uniform_violations > 0 && col_sharp_violations == 0 && occ_violations == 0) {
        // Minimal worked example, exact arithmetic throughout.
        Hypergraph tri(3, {{1, 2, 3}});
        auto wt = tricol_weights(4, 1);
        ColouringState cx(3, 4), cy(3, 4);
        cx.set_colour(1, 2), cx.set_colour(2, 1), cx.set_colour(3, 1);
        cy.set_colour(1, 3), cy.set_colour(2, 1), cy.set_colour(3, 1);
        auto rep = exact_onestep_drift_tricol(tri, cx, cy, wt);
        out << "the uniform form is not implied by the per-edge accounting when an edge\n"
            << "through the change vertex has its other endpoints equal: one 3-edge,\n"
            << "palette 4, change vertex coloured 2 vs 3, others equal: exact drift "
            << rational_string(rep.drift) << "\n"
            << "vs uniform requirement " << rational_string(rep.d1_bound - rep.d0)
            << "; the corrected form holds with equality (E[d1] = "
            << rational_string(rep.d1_bound_sharp) << ")\n"
            << "the corrected inequality held on every pair tested, as did the uniform form\n"
            << "on every pair with no equal-outside edge\n";
    }
    r.detail = out.str();
    return r;
}

// 7. Uniform stationarity of the exact single-site kernels on every instance
// with an enumerable state space.
inline CriterionResult criterion_uniform_stationarity(const std::string& data_dir) {
    CriterionResult r;
    r.name = "uniform-stationarity";
    std::ostringstream out;
    bool ok = true;
    long checked = 0;

    auto check_indset = [&](const std::string& name, const Hypergraph& h) {
        if (h.vertex_count() > 22) return;
        if (brute_count_indsets(h).count > kMaxEnumeratedStates) return;
        auto states = enumerate_indsets(h);
        auto k = indset_kernel(h, states);
        double err = stationarity_error(k);
        bool good = is_row_stochastic(k) && is_symmetric(k) && err <= 1e-12;
        if (!good) {
            ok = false;
            out << name << " occupancy kernel: stationarity error " << detail::fmt(err, 3)
                << "\n";
        }
        ++checked;
    };
    auto check_tricol = [&](const std::string& name, const Hypergraph& h, int q) {
        double space = std::pow(double(q), h.vertex_count());
        if (space > 1e7) return;
        if (brute_count_colourings(h, q).count > kMaxEnumeratedStates) return;
        auto states = enumerate_proper_colourings(h, q);
        auto k = tricol_kernel(h, q, states);
        double err = stationarity_error(k);
        bool good = is_row_stochastic(k) && is_symmetric(k) && err <= 1e-12;
        if (!good) {
            ok = false;
            out << name << " colouring kernel (q=" << q << "): stationarity error "
                << detail::fmt(err, 3) << "\n";
        }
        ++checked;
    };

    for (const auto& p : detail::corpus_files(data_dir, ".hg")) {
        auto h = detail::parse_file(p, parse_hypergraph);
        check_indset(p.filename().string(), h);
        for (int q : {2, 3, 4}) check_tricol(p.filename().string(), h, q);
    }
    out << checked << " enumerable kernels: all row-stochastic, symmetric, and uniform-\n"
        << "stationary to 1e-12 per entry\n";
    r.pass = ok && checked >= 8;
    r.detail = out.str();
    return r;
}

// 8. Coupled-step marginals: exact per-proposal agreement with the single-site
// kernels on enumerable instances, stream-level determinism, and chi-square
// agreement for the sampled pathways.
inline CriterionResult criterion_coupling_marginals(const std::string& data_dir) {
    CriterionResult r;
    r.name = "coupling-marginals";
    std::ostringstream out;
    bool ok = true;

    // Exact: over the full proposal space, each component of the shared-
    // randomness step reproduces its kernel row for every state pair.
    {
        auto files = {std::string("single_edge.hg"), std::string("triangle.hg"),
                      std::string("two_edges.hg")};
        for (const auto& f : files) {
            auto h = detail::parse_file(std::filesystem::path(data_dir) / f, parse_hypergraph);
            int n = h.vertex_count();
            auto states = enumerate_indsets(h);
            auto kern = indset_kernel(h, states);
            for (size_t xi = 0; xi < states.size() && ok; ++xi)
                for (size_t yi = 0; yi < states.size() && ok; ++yi) {
                    std::map<int, long> tally_x, tally_y;
                    for (int v = 1; v <= n; ++v)
                        for (bool ins : {false, true}) {
                            IndSetProposal p{v, ins};
                            ++tally_x[state_index(states, apply_indset(h, states[xi], p))];
                            ++tally_y[state_index(states, apply_indset(h, states[yi], p))];
                        }
                    if (tally_x != kern.rows[xi] || tally_y != kern.rows[yi]) {
                        ok = false;
                        out << f << ": exact marginal mismatch at state pair (" << xi << ", "
                            << yi << ")\n";
                    }
                }
        }
        auto tri = detail::parse_file(std::filesystem::path(data_dir) / "triangle.hg",
                                      parse_hypergraph);
        int q = 3;
        auto states = enumerate_proper_colourings(tri, q);
        auto kern = tricol_kernel(tri, q, states);
        for (size_t xi = 0; xi < states.size() && ok; ++xi)
            for (size_t yi = 0; yi < states.size() && ok; ++yi) {
                std::map<int, long> tally_x, tally_y;
                for (int v = 1; v <= tri.vertex_count(); ++v)
                    for (int c = 1; c <= q; ++c) {
                        TriColProposal p{v, c};
                        ++tally_x[state_index(states, apply_tricol(tri, states[xi], p))];
                        ++tally_y[state_index(states, apply_tricol(tri, states[yi], p))];
                    }
                if (tally_x != kern.rows[xi] || tally_y != kern.rows[yi]) {
                    ok = false;
                    out << "triangle colouring: exact marginal mismatch at (" << xi << ", " << yi
                        << ")\n";
                }
            }
        if (ok) out << "exact per-proposal marginals match the kernels on all state pairs\n";
    }

    // Stream determinism: with identical randomness the coupled components and
    // the single chains advance identically.
    {
        auto h = detail::parse_file(std::filesystem::path(data_dir) / "overlap.hg",
                                    parse_hypergraph);
        RandomSource seeds(777);
        OccupancyState x(h.vertex_count()), y(h.vertex_count());
        y.insert(1);
        bool stream_ok = true;
        for (int i = 0; i < 1000; ++i) {
            uint64_t s = seeds.next_u64();
            RandomSource a1(s), a2(s), a3(s);
            auto [cx, cy] = coupled_indset_step(h, x, y, a1);
            if (cx != glauber_indset_step(h, x, a2) || cy != glauber_indset_step(h, y, a3))
                stream_ok = false;
            x = cx, y = cy;
        }
        if (!stream_ok) {
            ok = false;
            out << "shared-randomness components diverge from single chains\n";
        } else {
            out << "coupled components equal single chains run on the same stream (1000 steps)\n";
        }
    }

    // Sampled: chi-square of 1e5 one-step draws against exact kernel rows.
    {
        auto h = detail::parse_file(std::filesystem::path(data_dir) / "overlap.hg",
                                    parse_hypergraph);
        auto states = enumerate_indsets(h);
        auto kern = indset_kernel(h, states);
        OccupancyState x0(h.vertex_count()), y0(h.vertex_count());
        y0.insert(2);
        int xi = state_index(states, x0), yi = state_index(states, y0);
        long reps = 100000;
        std::vector<long> obs_x(states.size(), 0), obs_y(states.size(), 0);
        RandomSource root(4242);
        for (long i = 0; i < reps; ++i) {
            auto rng = root.child(uint64_t(i));
            auto [nx, ny] = coupled_indset_step(h, x0, y0, rng);
            ++obs_x[size_t(state_index(states, nx))];
            ++obs_y[size_t(state_index(states, ny))];
        }
        auto expected_of = [&](int row) {
            std::vector<long> e(states.size(), 0);
            for (auto [j, c] : kern.rows[size_t(row)]) e[size_t(j)] = c;
            return e;
        };
        auto tx = chi_square_counts(obs_x, expected_of(xi), kern.denominator);
        auto ty = chi_square_counts(obs_y, expected_of(yi), kern.denominator);
        bool good = tx.pvalue >= 1e-3 && ty.pvalue >= 1e-3;
        if (!good) ok = false;
        out << "occupancy coupled marginals vs kernel rows over " << reps
            << " samples: p = " << detail::fmt(tx.pvalue, 4) << " / " << detail::fmt(ty.pvalue, 4)
            << (good ? "\n" : "  REJECTED at 1e-3\n");
    }
    {
        auto tri = detail::parse_file(std::filesystem::path(data_dir) / "triangle.hg",
                                      parse_hypergraph);
        int q = 4;
        auto states = enumerate_proper_colourings(tri, q);
        auto kern = tricol_kernel(tri, q, states);
        ColouringState x0(3, q), y0(3, q);
        x0.set_colour(1, 1), x0.set_colour(2, 1), x0.set_colour(3, 2);
        y0.set_colour(1, 3), y0.set_colour(2, 1), y0.set_colour(3, 2);
        int xi = state_index(states, x0), yi = state_index(states, y0);
        long reps = 100000;
        std::vector<long> obs_x(states.size(), 0), obs_y(states.size(), 0);
        RandomSource root(4343);
        for (long i = 0; i < reps; ++i) {
            auto rng = root.child(uint64_t(i));
            auto [nx, ny] = coupled_tricol_step(tri, x0, y0, rng);
            ++obs_x[size_t(state_index(states, nx))];
            ++obs_y[size_t(state_index(states, ny))];
        }
        auto expected_of = [&](int row) {
            std::vector<long> e(states.size(), 0);
            for (auto [j, c] : kern.rows[size_t(row)]) e[size_t(j)] = c;
            return e;
        };
        auto tx = chi_square_counts(obs_x, expected_of(xi), kern.denominator);
        auto ty = chi_square_counts(obs_y, expected_of(yi), kern.denominator);
        bool good = tx.pvalue >= 1e-3 && ty.pvalue >= 1e-3;
        if (!good) ok = false;
        out << "colouring coupled marginals vs kernel rows over " << reps
            << " samples: p = " << detail::fmt(tx.pvalue, 4) << " / " << detail::fmt(ty.pvalue, 4)
            << (good ? "\n" : "  REJECTED at 1e-3\n");
    }

    // Whole-graph chain: no enumerable kernel, so compare the coupled marginal
    // against an independent single-chain sample (homogeneity test).
    {
        BipartiteGraph g(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
        int q = 3;
        ColouringState x0(4, q), y0(4, q);
        x0.set_colour(1, 1), x0.set_colour(2, 1), x0.set_colour(3, 2), x0.set_colour(4, 2);
        y0.set_colour(1, 1), y0.set_colour(2, 2), y0.set_colour(3, 3), y0.set_colour(4, 3);
        long reps = 100000;
        auto key_of = [](const ColouringState& s) {
            int k = 0;
            for (int v = 1; v <= 4; ++v) k = k * 4 + s.colour(v);
            return k;
        };
        std::map<int, long> coupled_bins, single_bins;
        RandomSource root_a(4444), root_b(4545);
        for (long i = 0; i < reps; ++i) {
            auto ra = root_a.child(uint64_t(i));
            auto [nx, ny] = coupled_multicolour_step_general(g, x0, y0, ra);
            ++coupled_bins[key_of(nx)];
            auto rb = root_b.child(uint64_t(i));
            ++single_bins[key_of(multicolour_step(g, x0, rb))];
        }
        auto t = detail::homogeneity(coupled_bins, single_bins);
        bool good = t.pvalue >= 1e-3;
        if (!good) ok = false;
        out << "whole-graph coupled marginal vs independent single-chain sample: p = "
            << detail::fmt(t.pvalue, 4) << (good ? "\n" : "  REJECTED at 1e-3\n");
    }

    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 9. Available-colour oracle: exact conditional expectations over every
// admissible neighbour-list configuration at small palette/degree.
inline CriterionResult criterion_available_colour_oracle() {
    CriterionResult r;
    r.name = "available-colour-oracle";
    std::ostringstream out;
    bool ok = true;
    long configs = 0, violations = 0;
    for (int d = 1; d <= 3; ++d)
        for (int q = d + 2; q <= 6; ++q) {
            auto b = bip_bounds(q, d);
            double alpha = to_double(b.alpha), alpha_prime = to_double(b.alpha_prime);
            // Every neighbour list excludes one common blocked colour; by
            // relabelling, take it to be colour q, so the lists range over the
            // subsets of {1..q-1} with at least q-d colours.
            std::vector<std::vector<int>> eligible;
            for (unsigned mask = 1; mask < (1u << (q - 1)); ++mask) {
                if (__builtin_popcount(mask) < q - d) continue;
                std::vector<int> s;
                for (int c = 1; c < q; ++c)
                    if (mask & (1u << (c - 1))) s.push_back(c);
                eligible.push_back(std::move(s));
            }
            std::vector<size_t> pick(size_t(d), 0);
            for (;;) {
                std::vector<std::vector<int>> sets;
                for (int i = 0; i < d; ++i) sets.push_back(eligible[pick[size_t(i)]]);
                for (int q1 : sets[0]) {
                    auto res = available_colour_oracle(q, d, sets, q1);
                    ++configs;
                    if (to_double(res.expect_available) < alpha - 1e-12 ||
                        to_double(res.expect_reciprocal) > alpha_prime + 1e-12) {
                        ++violations;
                        if (violations <= 5)
                            out << "q=" << q << " d=" << d << " q1=" << q1 << ": E[q-c]="
                                << rational_string(res.expect_available) << " vs alpha=" <<
                                detail::fmt(alpha, 10) << ", E[1/(q-c)]="
                                << rational_string(res.expect_reciprocal) << " vs alpha'="
                                << detail::fmt(alpha_prime, 10) << "\n";
                    }
                }
                int pos = d - 1;
                while (pos >= 0 && ++pick[size_t(pos)] == eligible.size()) pick[size_t(pos--)] = 0;
                if (pos < 0) break;
            }
        }
    ok = violations == 0;
    out << configs << " configurations across palettes 3..6, degrees 1..3: " << violations
        << " violations of E[q-c] >= alpha or E[1/(q-c)] <= alpha'\n";
    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 10. Whole-graph contraction on random bipartite instances at the first
// certified palette.
inline CriterionResult criterion_whole_graph_contraction() {
    CriterionResult r;
    r.name = "whole-graph-contraction";
    std::ostringstream out;
    bool ok = true;
    int q = 17, d = 9;
    for (uint64_t seed : {11, 12, 13}) {
        auto g = gen_bipartite(20, 20, d, seed);
        RandomSource rng(600 + seed);
        auto [x, y] = random_adjacent_bipartite_pair(g, q, rng);
        auto rep = mc_drift_multicolour(g, x, y, 10000, 700 + seed);
        bool good = rep.pass;
        if (!good) ok = false;
        out << "instance seed " << seed << ": mean ratio " << detail::fmt(rep.mean_ratio, 5)
            << " vs bound " << detail::fmt(rep.bound_ratio, 5) << " (stderr "
            << detail::fmt(rep.stderr_, 4) << ")" << (good ? "\n" : "  FAILED\n");
    }
    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 11. Stopping-time estimates on the 4-uniform degree-2 occupancy family:
// contraction ratio below one with confidence, adjusted-distance contraction,
// and the geometric tail.
inline CriterionResult criterion_stopping_time_estimates() {
    CriterionResult r;
    r.name = "stopping-time-estimates";
    std::ostringstream out;
    auto h = gen_hypergraph(24, 4, 2, 31);
    auto wt = indset_weights(4, 2);
    IndSetCoupling c{h, wt};
    RandomSource rng(320);
    std::vector<std::pair<OccupancyState, OccupancyState>> pairs;
    for (int i = 0; i < 4; ++i) pairs.push_back(random_adjacent_indset_pair(h, rng));
    long k = 2L * h.vertex_count();
    auto st = estimate_alpha_p(c, pairs, k, 3000, 321);
    bool conf = !st.failed && st.alpha_hat + 2.5758 * st.alpha_stderr < 1.0;
    out << "alpha_hat = " << detail::fmt(st.alpha_hat, 5) << " +- " << detail::fmt(st.alpha_stderr, 5)
        << " (99% upper " << detail::fmt(st.alpha_hat + 2.5758 * st.alpha_stderr, 5)
        << "), p_hat = " << detail::fmt(st.p_hat, 4) << ", censored " << st.censored << "\n";
    if (!conf) out << "contraction ratio not below one at 99% confidence\n";

    auto ck = contraction_check(c, pairs[0].first, pairs[0].second, k, 3000, st.alpha_hat,
                                st.p_hat, 322);
    out << "adjusted distance: start " << detail::fmt(ck.d_prime_start, 5) << ", after " << k
        << " steps " << detail::fmt(ck.d_prime_at_k, 5) << ", bound "
        << detail::fmt(ck.bound, 5) << " + " << detail::fmt(ck.margin, 5)
        << (ck.pass ? "\n" : "  FAILED\n");

    auto tail = tail_bound_check(c, pairs[0].first, pairs[0].second, k, st.p_hat, 4 * k, 1500, 323);
    out << "geometric tail at thresholds";
    for (size_t i = 0; i < tail.thresholds.size(); ++i)
        out << " " << tail.thresholds[i] << ":" << detail::fmt(tail.empirical[i], 3) << "<="
            << detail::fmt(tail.bound[i], 3);
    out << (tail.pass ? "\n" : "  FAILED\n");

    r.pass = conf && ck.pass && tail.pass;
    r.detail = out.str();
    return r;
}

// 12. Counting: exact translation equivalence across the instance corpus and
// the approximate counter against brute force on a 16-vertex instance.
inline CriterionResult criterion_counting(const std::string& data_dir) {
    CriterionResult r;
    r.name = "counting-equivalence";
    std::ostringstream out;
    bool ok = true;
    long corpus = 0;
    for (const auto& p : detail::corpus_files(data_dir, ".hg")) {
        auto h = detail::parse_file(p, parse_hypergraph);
        if (h.vertex_count() > 20) continue;
        auto direct = brute_count_indsets(h).count;
        auto via_formula = brute_count_sat(to_monotone_cnf(h)).count;
        auto round_trip = from_monotone_cnf(to_monotone_cnf(h));
        bool good = direct == via_formula && round_trip.edges() == h.edges() &&
                    round_trip.vertex_count() == h.vertex_count();
        if (!good) {
            ok = false;
            out << p.filename().string() << ": translation mismatch (" << direct.str() << " vs "
                << via_formula.str() << ")\n";
        }
        ++corpus;
    }
    for (const auto& p : detail::corpus_files(data_dir, ".cnf")) {
        auto f = detail::parse_file(p, parse_dimacs);
        if (f.variable_count() > 20) continue;
        auto direct = brute_count_sat(f).count;
        auto via_graph = brute_count_indsets(from_monotone_cnf(f)).count;
        if (direct != via_graph) {
            ok = false;
            out << p.filename().string() << ": translation mismatch\n";
        }
        ++corpus;
    }
    out << corpus << " corpus instances: exact counts agree across both encodings\n";

    auto h16 = gen_hypergraph(16, 4, 2, 777);
    Integer exact = brute_count_indsets(h16).count;
    int hits = 0;
    long long total_steps = 0;
    for (int t = 0; t < 50; ++t) {
        auto res = approx_count_indsets(h16, 0.1, 0.1, 1000 + uint64_t(t));
        double ratio = to_double(res.estimate / Rational(exact));
        if (std::fabs(ratio - 1.0) <= 0.1) ++hits;
        total_steps += res.total_steps;
    }
    out << "approximate counter on a 16-vertex 4-uniform degree-2 instance (" << h16.edge_count()
        << " edges, exact count " << exact.str() << "): " << hits
        << "/50 trials within 10% (need 45), " << total_steps << " total chain steps\n";
    if (hits < 45) ok = false;
    r.pass = ok;
    r.detail = out.str();
    return r;
}

// 13. Coalescence scaling for the whole-graph chain at twice the degree:
// growth from 20 to 80 vertices stays well below linear.
inline CriterionResult criterion_coalescence_scaling() {
    CriterionResult r;
    r.name = "coalescence-scaling";
    std::ostringstream out;
    int d = 9, q = 18;
    std::map<int, double> means;
    bool ok = true;
    for (int side : {10, 20, 40}) {
        auto g = gen_bipartite(side, side, d, 50 + uint64_t(side));
        MulticolourCoupling c{g};
        auto x0 = constant_colouring(g.vertex_count(), q, 1);
        auto y0 = constant_colouring(g.vertex_count(), q, 2);
        auto st = coalescence_time(c, x0, y0, 300, 20000, 900 + uint64_t(side));
        if (st.censored > 0) {
            ok = false;
            out << "n=" << 2 * side << ": " << st.censored << " runs hit the cap\n";
        }
        means[2 * side] = st.mean;
        out << "n=" << 2 * side << ": mean coalescence " << detail::fmt(st.mean, 4)
            << " steps (median " << st.median << ", max " << st.max << ")\n";
    }
    if (!(means[80] < 3 * means[20])) {
        ok = false;
        out << "mean at n=80 not below 3x mean at n=20\n";
    } else {
        out << "mean(n=80) / mean(n=20) = " << detail::fmt(means[80] / means[20], 3)
            << " < 3: growth is sublinear over a 4x size range\n";
    }
    r.pass = ok;
    r.detail = out.str();
    return r;
}

inline CriterionResult run_criterion(int id, const std::string& data_dir) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
        case 1: r = criterion_published_palette_table(); break;
        case 2: r = criterion_palette_threshold_bound(); break;
        case 3: r = criterion_asymptotic_ratio(); break;
        case 4: r = criterion_edge_size_thresholds(); break;
        case 5: r = criterion_weight_systems(); break;
        case 6: r = criterion_drift_oracles(); break;
        case 7: r = criterion_uniform_stationarity(data_dir); break;
        case 8: r = criterion_coupling_marginals(data_dir); break;
        case 9: r = criterion_available_colour_oracle(); break;
        case 10: r = criterion_whole_graph_contraction(); break;
        case 11: r = criterion_stopping_time_estimates(); break;
        case 12: r = criterion_counting(data_dir); break;
        case 13: r = criterion_coalescence_scaling(); break;
        default: throw std::invalid_argument("criterion id out of range (1..13)");
    }
    r.id = id;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace mixtime::acceptance
