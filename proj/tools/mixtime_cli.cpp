// Command-line front end: tables, weight systems, chain simulation, drift and
// stopping-time experiments, counting, and the acceptance suite. Every output
// embeds the tool version, the fully resolved configuration, and the seed, so
// runs are reproducible bit for bit.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance_suite.hpp"
#include "mixtime/analysis/bipartite_bounds.hpp"
#include "mixtime/analysis/indset_weights.hpp"
#include "mixtime/analysis/tricol_weights.hpp"
#include "mixtime/chains/glauber.hpp"
#include "mixtime/chains/multicolour.hpp"
#include "mixtime/chains/random_source.hpp"
#include "mixtime/counting/approx.hpp"
#include "mixtime/counting/brute.hpp"
#include "mixtime/coupling/drift.hpp"
#include "mixtime/coupling/pairs.hpp"
#include "mixtime/coupling/stopping.hpp"
#include "mixtime/instances/generate.hpp"
#include "mixtime/instances/io.hpp"

using nlohmann::json;
using namespace mixtime;

namespace {

constexpr const char* kTool = "mixtime";
constexpr const char* kVersion = "1.0.0";

// MIXTIME_DIGITS sets the default working precision for the real-valued
// threshold computations.
unsigned env_digits() {
    const char* v = std::getenv("MIXTIME_DIGITS");
    if (!v) return 50;
    long d = std::strtol(v, nullptr, 10);
    if (d < 10) d = 10;
    if (d > 500) d = 500;
    return unsigned(d);
}

json meta_block(const json& config) {
    return json{{"tool", kTool}, {"version", kVersion}, {"config", config}};
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

std::string csv_preamble(const json& config) {
    std::ostringstream ss;
    ss << "# tool: " << kTool << ' ' << kVersion << '\n';
    ss << "# config: " << config.dump() << '\n';
    return ss.str();
}

std::string two_dp(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// Shared instance selection: an on-disk file or a seeded generator.
struct InstanceOpts {
    std::string path;
    int gen_n = 0, gen_m = 0, gen_left = 0, gen_right = 0, gen_deg = 0;
    std::uint64_t gen_seed = 1;

    void attach_hypergraph(CLI::App* cmd) {
        cmd->add_option("--instance", path, "hypergraph file (header 'n k', one edge per line)");
        cmd->add_option("--gen-n", gen_n, "generate: vertex count");
        cmd->add_option("--gen-m", gen_m, "generate: edge size");
        cmd->add_option("--gen-d", gen_deg, "generate: max degree");
        cmd->add_option("--gen-seed", gen_seed, "generate: seed")->capture_default_str();
    }
    void attach_bipartite(CLI::App* cmd) {
        cmd->add_option("--instance", path, "bipartite file (header 'n1 n2 k', 'u v' lines)");
        cmd->add_option("--gen-left", gen_left, "generate: left side size");
        cmd->add_option("--gen-right", gen_right, "generate: right side size");
        cmd->add_option("--gen-d", gen_deg, "generate: max degree");
        cmd->add_option("--gen-seed", gen_seed, "generate: seed")->capture_default_str();
    }

    Hypergraph hypergraph(json& config) const {
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open " + path);
            config["instance"] = path;
            return parse_hypergraph(in);
        }
        if (gen_n <= 0 || gen_m <= 0 || gen_deg <= 0)
            throw std::invalid_argument("need --instance or all of --gen-n/--gen-m/--gen-d");
        config["generator"] = {{"n", gen_n}, {"m", gen_m}, {"d", gen_deg}, {"seed", gen_seed}};
        return gen_hypergraph(gen_n, gen_m, gen_deg, gen_seed);
    }
    BipartiteGraph bipartite(json& config) const {
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open " + path);
            config["instance"] = path;
            return parse_bipartite(in);
        }
        if (gen_left <= 0 || gen_right <= 0 || gen_deg <= 0)
            throw std::invalid_argument(
                "need --instance or all of --gen-left/--gen-right/--gen-d");
        config["generator"] = {
            {"left", gen_left}, {"right", gen_right}, {"d", gen_deg}, {"seed", gen_seed}};
        return gen_bipartite(gen_left, gen_right, gen_deg, gen_seed);
    }
};

int run_tables(const std::string& what, const std::string& format, const std::string& variant,
               unsigned digits, const std::string& out_path) {
    if (what != "table1")
        throw std::invalid_argument("unknown table '" + what + "' (available: table1)");
    auto v = variant == "symmetric" ? AlphaPrimeVVariant::symmetric : AlphaPrimeVVariant::printed;
    if (variant != "printed" && variant != "symmetric")
        throw std::invalid_argument("variant must be printed or symmetric");

    json config{{"subcommand", "tables"}, {"what", what},       {"format", format},
                {"variant", variant},     {"digits", digits}};
    std::vector<int> degrees;
    for (int d = 9; d <= 50; ++d) degrees.push_back(d);
    degrees.push_back(10000);

    if (format == "csv") {
        std::ostringstream ss;
        ss << csv_preamble(config);
        ss << "degree,min_palette,ceiling,ratio\n";
        for (int d : degrees) {
            int q = min_q_for_contraction(d, digits, v);
            ss << d << ',' << q << ',' << (11 * d + 5) / 6 << ',' << two_dp(double(q) / d)
               << '\n';
        }
        emit(out_path, ss.str());
    } else if (format == "json") {
        json rows = json::array();
        for (int d : degrees) {
            int q = min_q_for_contraction(d, digits, v);
            rows.push_back({{"degree", d},
                            {"min_palette", q},
                            {"ceiling", (11 * d + 5) / 6},
                            {"ratio", double(q) / d}});
        }
        json doc{{"meta", meta_block(config)}, {"rows", rows}};
        emit(out_path, doc.dump(2) + "\n");
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return 0;
}

int run_weights(const std::string& family, int m, int d, int q, const std::string& format,
                const std::string& out_path) {
    json config{{"subcommand", "weights"}, {"family", family}, {"format", format}};
    json doc;
    if (family == "indset") {
        if (m < 2 || d < 1) throw std::invalid_argument("indset weights need -m >= 2 and -d >= 1");
        config["edge_size"] = m;
        config["max_degree"] = d;
        auto w = indset_weights(m, d);
        auto check = verify_indset_recurrence(w);
        json c = json::array();
        for (const auto& ci : w.c) c.push_back(rational_string(ci));
        doc = {{"meta", meta_block(config)},
               {"family", "indset"},
               {"edge_size", m},
               {"max_degree", d},
               {"gamma", rational_string(w.gamma)},
               {"contracts", !w.no_contraction},
               {"c", c},
               {"residuals_zero", check.ok()},
               {"threshold", rational_string(f_threshold(m))}};
    } else if (family == "colouring") {
        if (q < 2 || d < 1)
            throw std::invalid_argument("colouring weights need -q >= 2 and -d >= 1");
        config["palette"] = q;
        config["max_degree"] = d;
        auto w = tricol_weights(q, d);
        auto check = verify_tricol_system(w);
        doc = {{"meta", meta_block(config)},
               {"family", "colouring"},
               {"palette", q},
               {"max_degree", d},
               {"gamma", rational_string(w.gamma)},
               {"contracts", !w.no_contraction},
               {"c0", rational_string(w.c0())},
               {"c1", rational_string(w.c1)},
               {"c2", rational_string(w.c2)},
               {"c3", rational_string(w.c3)},
               {"c4", rational_string(w.c4)},
               {"residuals_zero", check.ok()},
               {"min_palette", tricol_min_q(d)}};
    } else {
        throw std::invalid_argument("family must be indset or colouring");
    }

    if (format == "json") {
        emit(out_path, doc.dump(2) + "\n");
    } else if (format == "csv") {
        std::ostringstream ss;
        ss << csv_preamble(config) << "key,value\n";
        for (auto& [key, value] : doc.items()) {
            if (key == "meta") continue;
            if (value.is_array()) {
                for (size_t i = 0; i < value.size(); ++i)
                    ss << key << i << ',' << value[i].get<std::string>() << '\n';
            } else if (value.is_string()) {
                ss << key << ',' << value.get<std::string>() << '\n';
            } else {
                ss << key << ',' << value.dump() << '\n';
            }
        }
        emit(out_path, ss.str());
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return 0;
}

int run_simulate(const std::string& chain, const InstanceOpts& inst, int q, long steps,
                 std::uint64_t seed, const std::string& out_path) {
    json config{{"subcommand", "simulate"}, {"chain", chain}, {"steps", steps}, {"seed", seed}};
    RandomSource rng(seed);
    json doc;
    if (chain == "indset") {
        auto h = inst.hypergraph(config);
        OccupancyState s(h.vertex_count());
        long accepted = 0;
        int max_size = 0;
        for (long t = 0; t < steps; ++t) {
            auto next = glauber_indset_step(h, s, rng);
            if (!(next == s)) ++accepted;
            s = next;
            max_size = std::max(max_size, s.size());
        }
        doc = {{"meta", meta_block(config)},
               {"vertices", h.vertex_count()},
               {"edges", h.edge_count()},
               {"accepted_moves", accepted},
               {"final_occupancy", s.size()},
               {"max_occupancy", max_size},
               {"independent", is_independent(h, s)}};
    } else if (chain == "colouring") {
        if (q < 2) throw std::invalid_argument("colouring simulation needs -q >= 2");
        config["palette"] = q;
        auto h = inst.hypergraph(config);
        auto s = greedy_colouring(h, q);
        long accepted = 0;
        for (long t = 0; t < steps; ++t) {
            auto next = glauber_tricol_step(h, s, rng);
            if (!(next == s)) ++accepted;
            s = next;
        }
        std::vector<long> histogram(size_t(q) + 1, 0);
        for (int v = 1; v <= h.vertex_count(); ++v) ++histogram[size_t(s.colour(v))];
        histogram.erase(histogram.begin());
        doc = {{"meta", meta_block(config)},
               {"vertices", h.vertex_count()},
               {"edges", h.edge_count()},
               {"accepted_moves", accepted},
               {"colour_histogram", histogram},
               {"proper", is_proper(h, s)}};
    } else if (chain == "multicolour" || chain == "scan") {
        if (q < 2) throw std::invalid_argument("whole-graph simulation needs -q >= 2");
        config["palette"] = q;
        auto g = inst.bipartite(config);
        auto s = random_bipartite_colouring(g, q, rng);
        for (long t = 0; t < steps; ++t)
            s = chain == "multicolour" ? multicolour_step(g, s, rng) : scan_step(g, s, rng, t);
        std::vector<long> histogram(size_t(q) + 1, 0);
        for (int v = 1; v <= g.vertex_count(); ++v) ++histogram[size_t(s.colour(v))];
        histogram.erase(histogram.begin());
        doc = {{"meta", meta_block(config)},
               {"vertices", g.vertex_count()},
               {"edges", long(g.edges().size())},
               {"colour_histogram", histogram},
               {"proper", is_proper(g, s)}};
    } else {
        throw std::invalid_argument("chain must be indset, colouring, multicolour, or scan");
    }
    emit(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_drift(const std::string& family, const InstanceOpts& inst, int q, long pairs, long reps,
              std::uint64_t seed, const std::string& out_path) {
    json config{{"subcommand", "drift"}, {"family", family}, {"seed", seed}};
    json doc;
    int exit_code = 0;
    if (family == "indset" || family == "colouring") {
        config["pairs"] = pairs;
        auto h = inst.hypergraph(config);
        RandomSource rng(seed);
        long enforced_violations = 0, uniform_violations = 0, equal_outside_pairs = 0;
        json examples = json::array();
        if (family == "indset") {
            if (!h.uniform_edge_size())
                throw std::invalid_argument("indset drift needs a uniform edge size");
            auto wt = indset_weights(h.min_edge_size(), h.max_degree());
            config["edge_size"] = wt.m;
            config["max_degree"] = wt.max_deg;
            config["gamma"] = rational_string(wt.gamma);
            for (long i = 0; i < pairs; ++i) {
                auto [x, y] = random_adjacent_indset_pair(h, rng);
                auto rep = exact_onestep_drift_indset(h, x, y, wt);
                if (!rep.pass) ++enforced_violations;
                if (long(examples.size()) < 10)
                    examples.push_back({{"drift", rational_string(rep.drift)},
                                        {"bound_gap", rational_string(rep.d1_bound - rep.d1)},
                                        {"pass", rep.pass}});
            }
            uniform_violations = enforced_violations;
        } else {
            if (q < 2) throw std::invalid_argument("colouring drift needs -q >= 2");
            config["palette"] = q;
            auto wt = tricol_weights(q, h.max_degree());
            config["max_degree"] = h.max_degree();
            config["gamma"] = rational_string(wt.gamma);
            for (long i = 0; i < pairs; ++i) {
                auto [x, y] = random_adjacent_tricol_pair(h, q, rng);
                auto rep = exact_onestep_drift_tricol(h, x, y, wt);
                if (!rep.pass_sharp) ++enforced_violations;
                if (!rep.pass) ++uniform_violations;
                if (rep.equal_outside_edges > 0) ++equal_outside_pairs;
                if (long(examples.size()) < 10)
                    examples.push_back(
                        {{"drift", rational_string(rep.drift)},
                         {"equal_outside_edges", rep.equal_outside_edges},
                         {"uniform_pass", rep.pass},
                         {"pass", rep.pass_sharp}});
            }
        }
        doc = {{"meta", meta_block(config)},
               {"pairs", pairs},
               {"violations", enforced_violations},
               {"uniform_violations", uniform_violations},
               {"equal_outside_pairs", equal_outside_pairs},
               {"examples", examples}};
        if (enforced_violations > 0) exit_code = 2;
    } else if (family == "multicolour") {
        if (q < 2) throw std::invalid_argument("multicolour drift needs -q >= 2");
        config["palette"] = q;
        config["reps"] = reps;
        auto g = inst.bipartite(config);
        RandomSource rng(seed);
        auto [x, y] = random_adjacent_bipartite_pair(g, q, rng);
        auto rep = mc_drift_multicolour(g, x, y, reps, rng.next_u64());
        doc = {{"meta", meta_block(config)},
               {"mean_ratio", rep.mean_ratio},
               {"stderr", rep.stderr_},
               {"bound_ratio", rep.bound_ratio},
               {"samples", rep.samples},
               {"pass", rep.pass}};
        if (!rep.pass) exit_code = 2;
    } else {
        throw std::invalid_argument("family must be indset, colouring, or multicolour");
    }
    emit(out_path, doc.dump(2) + "\n");
    return exit_code;
}

int run_stopping(const std::string& family, const std::string& mode, const InstanceOpts& inst,
                 int q, long k, long reps, long pair_count, long cap, std::uint64_t seed,
                 const std::string& out_path) {
    json config{{"subcommand", "stopping"}, {"family", family}, {"mode", mode},
                {"reps", reps},             {"seed", seed}};
    if (cap > 0) config["cap"] = cap;
    json doc;
    int exit_code = 0;

    auto alpha_doc = [&](const auto& coupling, const auto& pair_list) {
        auto st = estimate_alpha_p(coupling, pair_list, k, reps, seed, cap);
        doc = {{"meta", meta_block(config)},
               {"alpha_hat", st.alpha_hat},
               {"alpha_stderr", st.alpha_stderr},
               {"p_hat", st.p_hat},
               {"p_stderr", st.p_stderr},
               {"mean_d0", st.mean_d0},
               {"mean_d_stop", st.mean_d_t},
               {"adjusted_distance", st.d_prime},
               {"censored", st.censored},
               {"failed", st.failed}};
        if (st.failed) exit_code = 2;
    };
    auto coalesce_doc = [&](const auto& coupling, const auto& x0, const auto& y0) {
        long use_cap = cap > 0 ? cap : default_stopping_cap(coupling.vertex_count(), k);
        auto st = coalescence_time(coupling, x0, y0, reps, use_cap, seed);
        doc = {{"meta", meta_block(config)},
               {"mean", st.mean},
               {"median", st.median},
               {"max", st.max},
               {"censored", st.censored},
               {"coalesced", long(st.times.size())}};
        if (st.times.empty()) exit_code = 2;
    };

    if (family == "indset") {
        auto h = inst.hypergraph(config);
        if (!h.uniform_edge_size())
            throw std::invalid_argument("indset stopping needs a uniform edge size");
        auto wt = indset_weights(h.min_edge_size(), h.max_degree());
        IndSetCoupling coupling{h, wt};
        if (k <= 0) k = 2L * h.vertex_count();
        config["k"] = k;
        RandomSource rng(seed ^ 0x9e3779b97f4a7c15ull);
        if (mode == "alpha") {
            config["pairs"] = pair_count;
            std::vector<std::pair<OccupancyState, OccupancyState>> pair_list;
            for (long i = 0; i < pair_count; ++i)
                pair_list.push_back(random_adjacent_indset_pair(h, rng));
            alpha_doc(coupling, pair_list);
        } else if (mode == "coalesce") {
            OccupancyState x0(h.vertex_count());
            auto y0 = random_indset_state(h, 4L * h.vertex_count(), rng);
            coalesce_doc(coupling, x0, y0);
        } else {
            throw std::invalid_argument("mode must be alpha or coalesce");
        }
    } else if (family == "colouring") {
        if (q < 2) throw std::invalid_argument("colouring stopping needs -q >= 2");
        config["palette"] = q;
        auto h = inst.hypergraph(config);
        auto wt = tricol_weights(q, h.max_degree());
        TriColCoupling coupling{h, wt};
        if (k <= 0) k = 2L * h.vertex_count();
        config["k"] = k;
        RandomSource rng(seed ^ 0x9e3779b97f4a7c15ull);
        if (mode == "alpha") {
            config["pairs"] = pair_count;
            std::vector<std::pair<ColouringState, ColouringState>> pair_list;
            for (long i = 0; i < pair_count; ++i)
                pair_list.push_back(random_adjacent_tricol_pair(h, q, rng));
            alpha_doc(coupling, pair_list);
        } else if (mode == "coalesce") {
            auto x0 = random_proper_colouring(h, q, 4L * h.vertex_count(), rng);
            auto y0 = random_proper_colouring(h, q, 4L * h.vertex_count(), rng);
            coalesce_doc(coupling, x0, y0);
        } else {
            throw std::invalid_argument("mode must be alpha or coalesce");
        }
    } else if (family == "multicolour") {
        if (q < 2) throw std::invalid_argument("multicolour stopping needs -q >= 2");
        config["palette"] = q;
        auto g = inst.bipartite(config);
        MulticolourCoupling coupling{g};
        if (k <= 0) k = 2L * g.vertex_count();
        config["k"] = k;
        RandomSource rng(seed ^ 0x9e3779b97f4a7c15ull);
        if (mode == "alpha") {
            config["pairs"] = pair_count;
            std::vector<std::pair<ColouringState, ColouringState>> pair_list;
            for (long i = 0; i < pair_count; ++i)
                pair_list.push_back(random_adjacent_bipartite_pair(g, q, rng));
            alpha_doc(coupling, pair_list);
        } else if (mode == "coalesce") {
            auto x0 = constant_colouring(g.vertex_count(), q, 1);
            auto y0 = constant_colouring(g.vertex_count(), q, 2);
            coalesce_doc(coupling, x0, y0);
        } else {
            throw std::invalid_argument("mode must be alpha or coalesce");
        }
    } else {
        throw std::invalid_argument("family must be indset, colouring, or multicolour");
    }
    emit(out_path, doc.dump(2) + "\n");
    return exit_code;
}

// A counting input is either a hypergraph file or a DIMACS formula; sniff by
// the first content character.
bool looks_like_dimacs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        return line[pos] == 'c' || line[pos] == 'p';
    }
    throw std::invalid_argument("empty instance file " + path);
}

int run_count(const std::string& path, const std::string& mode, double epsilon, double delta,
              std::uint64_t seed, const std::string& out_path) {
    json config{{"subcommand", "count"}, {"instance", path}, {"mode", mode}, {"seed", seed}};
    bool dimacs = looks_like_dimacs(path);
    config["input_format"] = dimacs ? "dimacs" : "hypergraph";
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);

    json doc;
    if (mode == "brute") {
        CountResult res = dimacs ? brute_count_sat(parse_dimacs(in))
                                 : brute_count_indsets(parse_hypergraph(in));
        doc = {{"meta", meta_block(config)},
               {"count", res.count.str()},
               {"states_visited", res.states_visited}};
    } else if (mode == "approx") {
        config["epsilon"] = epsilon;
        config["delta"] = delta;
        ApproxCountResult res =
            dimacs ? approx_count_sat(parse_dimacs(in), epsilon, delta, seed)
                   : approx_count_indsets(parse_hypergraph(in), epsilon, delta, seed);
        json levels = json::array();
        for (const auto& lv : res.levels)
            levels.push_back({{"level", lv.level},
                              {"ratio", rational_string(lv.ratio)},
                              {"pilot_ratio", lv.pilot_ratio},
                              {"burn_in", lv.burn_in},
                              {"batches", lv.batches},
                              {"batch_size", lv.batch_size}});
        doc = {{"meta", meta_block(config)},
               {"estimate", rational_string(res.estimate)},
               {"estimate_double", to_double(res.estimate)},
               {"total_samples", res.total_samples},
               {"total_steps", res.total_steps},
               {"levels", levels}};
    } else {
        throw std::invalid_argument("mode must be brute or approx");
    }
    emit(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_verify(const std::string& suite, int criterion, const std::string& data_dir,
               const std::string& out_path) {
    json config{{"subcommand", "verify"}, {"data", data_dir}};
    std::vector<int> ids;
    if (criterion > 0) {
        ids = {criterion};
        config["criterion"] = criterion;
    } else {
        ids = acceptance::suite_ids(suite);
        config["suite"] = suite;
    }
    json rows = json::array();
    int failures = 0;
    for (int id : ids) {
        auto r = acceptance::run_criterion(id, data_dir);
        std::printf("[%s] %02d %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds);
        if (!r.pass) ++failures;
        rows.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
    }
    if (!out_path.empty()) {
        json doc{{"meta", meta_block(config)}, {"results", rows}, {"failures", failures}};
        emit(out_path, doc.dump(2) + "\n");
    }
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis and simulation for single-site and whole-graph chains"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads,
                   "worker cap, recorded in output (this build runs sequentially)");
    std::string out_path;
    app.add_option("--out", out_path, "write the result here instead of stdout");

    auto* tables = app.add_subcommand("tables", "reference tables for the whole-graph chain");
    std::string tbl_what = "table1", tbl_format = "csv", tbl_variant = "printed";
    unsigned digits = env_digits();
    tables->add_option("--what", tbl_what, "which table (table1)")->capture_default_str();
    tables->add_option("--format", tbl_format, "csv or json")->capture_default_str();
    tables->add_option("--variant", tbl_variant,
                       "change-vertex reciprocal reading: printed or symmetric")->capture_default_str();
    tables->add_option("--digits", digits, "working precision (default from MIXTIME_DIGITS)")->capture_default_str();

    auto* weights = app.add_subcommand("weights", "exact path-metric weight systems");
    std::string wt_family = "indset", wt_format = "json";
    int wt_m = 0, wt_d = 0, wt_q = 0;
    weights->add_option("--family", wt_family, "indset or colouring")->capture_default_str();
    weights->add_option("-m,--edge-size", wt_m, "edge size (indset family)");
    weights->add_option("-d,--max-degree", wt_d, "max degree");
    weights->add_option("-q,--palette", wt_q, "palette size (colouring family)");
    weights->add_option("--format", wt_format, "json or csv")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "run a chain and summarise the trajectory");
    std::string sim_chain = "indset";
    InstanceOpts sim_inst;
    int sim_q = 0;
    long sim_steps = 1000;
    std::uint64_t sim_seed = 1;
    simulate->add_option("--chain", sim_chain, "indset, colouring, multicolour, or scan")->capture_default_str();
    sim_inst.attach_hypergraph(simulate);
    simulate->add_option("--gen-left", sim_inst.gen_left, "generate: left side (bipartite)");
    simulate->add_option("--gen-right", sim_inst.gen_right, "generate: right side (bipartite)");
    simulate->add_option("-q,--palette", sim_q, "palette size (colouring chains)");
    simulate->add_option("--steps", sim_steps, "number of steps")->capture_default_str();
    simulate->add_option("--seed", sim_seed, "seed")->capture_default_str();

    auto* drift = app.add_subcommand("drift", "one-step expected-distance experiments");
    std::string dr_family = "indset";
    InstanceOpts dr_inst;
    int dr_q = 0;
    long dr_pairs = 100, dr_reps = 10000;
    std::uint64_t dr_seed = 1;
    drift->add_option("--family", dr_family, "indset, colouring, or multicolour")->capture_default_str();
    dr_inst.attach_hypergraph(drift);
    drift->add_option("--gen-left", dr_inst.gen_left, "generate: left side (bipartite)");
    drift->add_option("--gen-right", dr_inst.gen_right, "generate: right side (bipartite)");
    drift->add_option("-q,--palette", dr_q, "palette size");
    drift->add_option("--pairs", dr_pairs, "adjacent pairs to test exactly")->capture_default_str();
    drift->add_option("--reps", dr_reps, "Monte Carlo reps (multicolour)")->capture_default_str();
    drift->add_option("--seed", dr_seed, "seed")->capture_default_str();

    auto* stopping = app.add_subcommand("stopping", "stopping-time and coalescence experiments");
    std::string st_family = "indset", st_mode = "alpha";
    InstanceOpts st_inst;
    int st_q = 0;
    long st_k = 0, st_reps = 2000, st_pairs = 4, st_cap = 0;
    std::uint64_t st_seed = 1;
    stopping->add_option("--family", st_family, "indset, colouring, or multicolour")->capture_default_str();
    stopping->add_option("--mode", st_mode, "alpha (stopping-time ratios) or coalesce")->capture_default_str();
    st_inst.attach_hypergraph(stopping);
    stopping->add_option("--gen-left", st_inst.gen_left, "generate: left side (bipartite)");
    stopping->add_option("--gen-right", st_inst.gen_right, "generate: right side (bipartite)");
    stopping->add_option("-q,--palette", st_q, "palette size");
    stopping->add_option("-k,--window", st_k, "step window for the within-k probability");
    stopping->add_option("--reps", st_reps, "repetitions")->capture_default_str();
    stopping->add_option("--pairs", st_pairs, "start pairs to cycle through")->capture_default_str();
    stopping->add_option("--cap", st_cap, "hard per-run step cap (0 = default)")->capture_default_str();
    stopping->add_option("--seed", st_seed, "seed")->capture_default_str();

    auto* count = app.add_subcommand("count", "count independent sets / satisfying assignments");
    std::string ct_path, ct_mode = "brute";
    double ct_eps = 0.1, ct_delta = 0.1;
    std::uint64_t ct_seed = 1;
    count->add_option("instance", ct_path, "hypergraph or DIMACS file")->required();
    count->add_option("--mode", ct_mode, "brute or approx")->capture_default_str();
    count->add_option("--epsilon", ct_eps, "relative accuracy (approx)")->capture_default_str();
    count->add_option("--delta", ct_delta, "failure probability (approx)")->capture_default_str();
    count->add_option("--seed", ct_seed, "seed")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    std::string vf_suite = "quick", vf_data = "data";
    int vf_criterion = 0;
    verify->add_option("--suite", vf_suite, "quick or full")->capture_default_str();
    verify->add_option("--criterion", vf_criterion, "run a single criterion (1..13)");
    verify->add_option("--data", vf_data, "instance corpus directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(tables))
            return run_tables(tbl_what, tbl_format, tbl_variant, digits, out_path);
        if (app.got_subcommand(weights))
            return run_weights(wt_family, wt_m, wt_d, wt_q, wt_format, out_path);
        if (app.got_subcommand(simulate))
            return run_simulate(sim_chain, sim_inst, sim_q, sim_steps, sim_seed, out_path);
        if (app.got_subcommand(drift))
            return run_drift(dr_family, dr_inst, dr_q, dr_pairs, dr_reps, dr_seed, out_path);
        if (app.got_subcommand(stopping))
            return run_stopping(st_family, st_mode, st_inst, st_q, st_k, st_reps, st_pairs,
                                st_cap, st_seed, out_path);
        if (app.got_subcommand(count))
            return run_count(ct_path, ct_mode, ct_eps, ct_delta, ct_seed, out_path);
        if (app.got_subcommand(verify))
            return run_verify(vf_suite, vf_criterion, vf_data, out_path);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "experiment failed: %s\n", e.what());
        return 2;
    }
    return 0;
}
