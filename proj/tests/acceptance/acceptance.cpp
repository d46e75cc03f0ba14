// Acceptance suite: one pass/fail line per criterion, exit 0 only if every
// selected criterion passes. Run with no arguments for all criteria, or pass
// numbers ("1", "c3", ...) to select a subset.

#include "harmolight/dynamics.hpp"
#include "harmolight/monoid.hpp"
#include "harmolight/ops.hpp"
#include "harmolight/report.hpp"
#include "harmolight/survey.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace harmolight;

namespace {

std::vector<std::string> g_failures;

void fail(std::string detail) { g_failures.push_back(std::move(detail)); }

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u + 1 < static_cast<std::uint32_t>(n); ++u)
        for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(n); ++v)
            if (rng() & 1)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// All labeled graphs on up to 5 vertices plus 100 seeded random graphs on
// 6..10 vertices: the shared sweep for the oracle criteria.
std::vector<Graph> oracle_sweep() {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : GraphEnumeration(n))
            graphs.push_back(g);
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 100; ++i)
        graphs.push_back(random_graph(6 + static_cast<int>(rng() % 5), rng));
    return graphs;
}

LoopEnsemble make_loops(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> loops) {
    LoopEnsemble e;
    for (auto [len, cnt] : loops)
        e.add_loops(len, cnt);
    return e;
}

// --- criteria -------------------------------------------------------------

std::string c1_loop_oracle() {
    const auto graphs = oracle_sweep();
    for (const Graph& g : graphs) {
        const auto analysis = analyze_graph(g);
        const auto oracle = oracle_loop_ensemble(brute_digraph(g));
        if (!(oracle == analysis.loops)) {
            fail("loop mismatch on " + to_edge_list(g) + ": " + analysis.loops.to_string() +
                 " vs oracle " + oracle.to_string());
            return "";
        }
    }
    return std::to_string(graphs.size()) + " graphs";
}

std::string c2_tree_oracle() {
    const auto graphs = oracle_sweep();
    for (const Graph& g : graphs) {
        const auto analysis = analyze_graph(g);
        const auto counts = oracle_kernel_counts(brute_digraph(g));
        if (counts.size() != analysis.filtration.size()) {
            fail("tail length mismatch on " + to_edge_list(g));
            return "";
        }
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (counts[j] != std::uint64_t{1} << analysis.filtration[j]) {
                fail("kernel count mismatch on " + to_edge_list(g) + " at step " +
                     std::to_string(j + 1));
                return "";
            }
        if (kernel_filtration_of(analysis.tree) != analysis.filtration) {
            fail("filtration round trip failed on " + to_edge_list(g));
            return "";
        }
    }
    return std::to_string(graphs.size()) + " graphs";
}

std::string c3_structural_theorems() {
    const auto graphs = oracle_sweep();
    for (const Graph& g : graphs) {
        const auto analysis = analyze_graph(g);
        const auto d = brute_digraph(g);
        const auto& profile = analysis.profile;
        if (profile.dim_L % 2 != 0) {
            fail("odd dim_L on " + to_edge_list(g));
            return "";
        }
        bool full_period_seen = false;
        for (const auto& cycle : d.cycles) {
            if (profile.period_m % cycle.size() != 0) {
                fail("cycle length " + std::to_string(cycle.size()) +
                     " does not divide period on " + to_edge_list(g));
                return "";
            }
            full_period_seen |= cycle.size() == profile.period_m;
        }
        if (!full_period_seen) {
            fail("no cycle of full period on " + to_edge_list(g));
            return "";
        }
        std::uint64_t cycle_states = 0;
        for (const auto& cycle : d.cycles)
            cycle_states += cycle.size();
        if (cycle_states != std::uint64_t{1} << profile.dim_L) {
            fail("cycle state count mismatch on " + to_edge_list(g));
            return "";
        }
        const auto counts = oracle_kernel_counts(d);
        const std::uint64_t dying = counts.empty() ? 1 : counts.back();
        if (dying != std::uint64_t{1} << profile.dim_T) {
            fail("nilpotent state count mismatch on " + to_edge_list(g));
            return "";
        }
    }
    return std::to_string(graphs.size()) + " graphs";
}

std::string c4_rule_matrix_agreement() {
    std::mt19937_64 rng(20240602);
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        const Graph g = random_graph(1 + static_cast<int>(rng() % 20), rng);
        const BitMatrix a = harmonic_matrix(g);
        const State s1 = State::random(g.vertex_count(), rng);
        const State s2 = State::random(g.vertex_count(), rng);
        if (!(rule_step(g, s1) == a * s1)) {
            fail("rule/matrix mismatch on " + to_edge_list(g) + " state " + s1.to_string());
            return "";
        }
        if (!(rule_step(g, s1 ^ s2) == (rule_step(g, s1) ^ rule_step(g, s2)))) {
            fail("superposition violated on " + to_edge_list(g));
            return "";
        }
    }
    return std::to_string(trials) + " random pairs";
}

std::string c5_disjoint_union() {
    std::vector<Graph> parts;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : GraphEnumeration(n))
            parts.push_back(g);
    std::vector<GraphAnalysis> analyses;
    analyses.reserve(parts.size());
    for (const Graph& g : parts)
        analyses.push_back(analyze_graph(g));

    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const Graph u = disjoint_union(parts[i], parts[j]);
            const auto direct = analyze_graph(u);
            const auto pred = union_prediction(analyses[i].tree, analyses[i].loops,
                                               analyses[j].tree, analyses[j].loops);
            if (!(pred.tree == direct.tree) || !(pred.loops == direct.loops)) {
                fail("union prediction mismatch on " + to_edge_list(u));
                return "";
            }
            const auto d = brute_digraph(u);
            if (!(oracle_loop_ensemble(d) == direct.loops)) {
                fail("union oracle loop mismatch on " + to_edge_list(u));
                return "";
            }
            const auto counts = oracle_kernel_counts(d);
            if (counts.size() != direct.filtration.size()) {
                fail("union oracle tail mismatch on " + to_edge_list(u));
                return "";
            }
            for (std::size_t k = 0; k < counts.size(); ++k)
                if (counts[k] != std::uint64_t{1} << direct.filtration[k]) {
                    fail("union oracle kernel mismatch on " + to_edge_list(u));
                    return "";
                }
            ++pairs;
        }
    return std::to_string(pairs) + " ordered pairs";
}

std::string c6_power_graphs() {
    std::uint64_t cases = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : GraphEnumeration(n)) {
            const auto base = analyze_graph(g);
            for (std::uint64_t q = 1; q <= 6; ++q) {
                const auto pred = power_prediction(base.profile, base.tree, base.loops, q);
                const auto direct = analyze_graph(power_graph(g, q));
                if (!(direct.loops == pred.loops_pred)) {
                    fail("power loop mismatch on " + to_edge_list(g) + " q=" + std::to_string(q));
                    return "";
                }
                if (direct.profile.period_m != pred.period_pred ||
                    direct.profile.tail_k != pred.tail_pred) {
                    fail("power profile mismatch on " + to_edge_list(g) +
                         " q=" + std::to_string(q));
                    return "";
                }
                if (!(direct.tree == pred.tree_pred)) {
                    fail("power tree mismatch on " + to_edge_list(g) + " q=" + std::to_string(q));
                    return "";
                }
                if (pred.tree_pred.total_dim() != base.profile.dim_T) {
                    fail("power tree dimension not conserved on " + to_edge_list(g) +
                         " q=" + std::to_string(q));
                    return "";
                }
                ++cases;
            }
        }
    return std::to_string(cases) + " (graph, q) cases";
}

std::string c7_value_fixtures() {
    const std::uint64_t table[6] = {6, 3, 2, 3, 6, 1};
    for (std::uint64_t b = 1; b <= 6; ++b)
        if (funny_div(6, b) != table[b - 1]) {
            fail("funny division 6/" + std::to_string(b));
            return "";
        }

    if (!(q_hat(4, make_loops({{6, 1}})) == make_loops({{3, 2}}))) {
        fail("q_hat(4, L6) != 2L3");
        return "";
    }

    // The two composite operators on a single loop, all three residue cases.
    const auto star2 = [](const LoopEnsemble& e) {
        return loop_product(make_loops({{2, 1}}), e);
    };
    for (std::uint64_t i = 1; i <= 24; ++i) {
        const auto li = make_loops({{i, 1}});
        const auto star_after_hat = star2(q_hat(2, li));
        const auto expected_sh = i % 2 == 1   ? make_loops({{2 * i, 1}})
                                 : i % 4 != 0 ? make_loops({{i, 2}})
                                              : make_loops({{i / 2, 4}});
        if (!(star_after_hat == expected_sh)) {
            fail("star-after-jump case table at i=" + std::to_string(i));
            return "";
        }
        const auto hat_after_star = q_hat(2, star2(li));
        const auto expected_hs =
            i % 2 == 1 ? make_loops({{i, 2}}) : make_loops({{i / 2, 4}});
        if (!(hat_after_star == expected_hs)) {
            fail("jump-after-star case table at i=" + std::to_string(i));
            return "";
        }
    }

    // Divisor-lattice inclusion-exclusion fixtures. The 30 case expands over
    // the generator pair {10, 15}; the full cover set {15, 10, 6} reproduces
    // the Moebius expansion, checked in the unit suite.
    const std::string n30 = render_expansion(divisor_ie_expansion(30, {10, 15}));
    if (n30 != "F30 - F10 - F15 + F5") {
        fail("30-loop expansion rendered as '" + n30 + "'");
        return "";
    }
    const std::string n60 = render_expansion(moebius_expansion(60));
    if (n60 != "F60 - F30 - F20 - F12 + F10 + F6 + F4 - F2") {
        fail("60-loop expansion rendered as '" + n60 + "'");
        return "";
    }
    return "all fixtures exact";
}

std::string c8_survey() {
    const auto report = run_survey(6, 4);
    if (!report.violations.empty()) {
        fail("survey found " + std::to_string(report.violations.size()) + " violations; first: " +
             report.violations.front().check + " on " + report.violations.front().edges);
        return "";
    }
    if (report.graphs_checked != 1 + 2 + 8 + 64 + 1024 + 32768) {
        fail("unexpected graph count " + std::to_string(report.graphs_checked));
        return "";
    }
    if (report.conjecture1.empty()) {
        fail("small-tree coverage missing from the report");
        return "";
    }
    std::uint64_t realized = 0;
    for (const auto& t : report.conjecture1)
        realized += t.realized ? 1 : 0;
    return std::to_string(report.graphs_checked) + " graphs, 0 violations, " +
           std::to_string(realized) + "/" + std::to_string(report.conjecture1.size()) +
           " small trees realized, cond3 conjunction violations: " +
           std::to_string(report.cond3_conjunction_violations);
}

struct Criterion {
    int number;
    const char* title;
    std::function<std::string()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "loop-ensemble oracle equivalence", c1_loop_oracle},
        {2, "characteristic-tree oracle equivalence", c2_tree_oracle},
        {3, "structural theorems over the sweep", c3_structural_theorems},
        {4, "rule/matrix agreement and superposition", c4_rule_matrix_agreement},
        {5, "disjoint-union predictions", c5_disjoint_union},
        {6, "power-graph predictions", c6_power_graphs},
        {7, "reported-value fixtures", c7_value_fixtures},
        {8, "survey soundness at n <= 6", c8_survey},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (!arg.empty() && (arg[0] == 'c' || arg[0] == 'C'))
            arg = arg.substr(1);
        selected.push_back(std::stoi(arg));
    }

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), criterion.number) == selected.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        g_failures.clear();
        try {
            detail = criterion.run();
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (g_failures.empty()) {
            std::printf("[PASS] C%d %s (%s, %.2fs)\n", criterion.number, criterion.title,
                        detail.c_str(), seconds);
        } else {
            all_ok = false;
            std::printf("[FAIL] C%d %s: %s (%.2fs)\n", criterion.number, criterion.title,
                        g_failures.front().c_str(), seconds);
        }
    }
    return all_ok ? 0 : 1;
}
