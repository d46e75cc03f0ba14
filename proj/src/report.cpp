#include "harmolight/report.hpp"

namespace harmolight {

using nlohmann::json;

GraphAnalysis analyze_graph(const Graph& g) {
    GraphAnalysis a;
    a.graph = g;
    a.a = harmonic_matrix(g);
    a.profile = monoid_profile(a.a);
    a.filtration = kernel_filtration(a.a, a.profile.tail_k);
    a.tree = tree_factorization(a.filtration);
    a.loops = loop_ensemble(fixed_dims(a.a, a.profile.period_m), a.profile.period_m);
    return a;
}

OracleComparison verify_against_oracle(const GraphAnalysis& analysis,
                                       const EvolutionDigraph& digraph) {
    OracleComparison cmp;
    cmp.loops_match = oracle_loop_ensemble(digraph) == analysis.loops;

    const auto counts = oracle_kernel_counts(digraph);
    cmp.kernel_counts_match = counts.size() == analysis.filtration.size();
    if (cmp.kernel_counts_match)
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (counts[j] != std::uint64_t{1} << analysis.filtration[j])
                cmp.kernel_counts_match = false;

    std::uint64_t cycle_states = 0;
    for (const auto& cycle : digraph.cycles)
        cycle_states += cycle.size();
    cmp.cycle_states_match = cycle_states == std::uint64_t{1} << analysis.profile.dim_L;

    const std::uint64_t nilpotent_states =
        counts.empty() ? 1 : counts.back(); // the zero state alone when the tail is empty
    cmp.nilpotent_states_match = nilpotent_states == std::uint64_t{1} << analysis.profile.dim_T;
    return cmp;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

json analysis_json(const GraphAnalysis& analysis, bool include_matrix) {
    json j;
    j["graph"] = graph_json(analysis.graph);
    if (include_matrix) {
        json rows = json::array();
        for (std::size_t r = 0; r < analysis.a.dim(); ++r)
            rows.push_back(analysis.a.row(r).to_string());
        j["harmonic_matrix"] = rows;
        j["kernel_filtration"] = analysis.filtration;
    }
    j["tail_k"] = analysis.profile.tail_k;
    j["period_m"] = analysis.profile.period_m;
    j["dim_T"] = analysis.profile.dim_T;
    j["dim_L"] = analysis.profile.dim_L;
    j["tree"] = analysis.tree.to_string();
    j["loops"] = analysis.loops.to_string();
    return j;
}

json verification_json(const OracleComparison& cmp) {
    return json{{"loops_match", cmp.loops_match},
                {"kernel_counts_match", cmp.kernel_counts_match},
                {"cycle_states_match", cmp.cycle_states_match},
                {"nilpotent_states_match", cmp.nilpotent_states_match},
                {"verified", cmp.ok()}};
}

json trace_json(const TraceResult& trace, bool include_trajectory) {
    json j{{"preperiod", trace.preperiod}, {"cycle_length", trace.cycle_length}};
    if (include_trajectory) {
        json steps = json::array();
        for (const auto& s : trace.trajectory)
            steps.push_back(s.to_string());
        j["trajectory"] = steps;
    }
    return j;
}

json union_report_json(const GraphAnalysis& g1, const GraphAnalysis& g2,
                       const GraphAnalysis& direct, const UnionPrediction& predicted) {
    const bool match =
        predicted.tree == direct.tree && predicted.loops == direct.loops;
    return json{{"command", "union"},
                {"first", analysis_json(g1, false)},
                {"second", analysis_json(g2, false)},
                {"union", analysis_json(direct, false)},
                {"predicted",
                 json{{"tree", predicted.tree.to_string()},
                      {"loops", predicted.loops.to_string()}}},
                {"prediction_match", match}};
}

json power_report_json(const GraphAnalysis& base, const GraphAnalysis& direct,
                       const PowerPrediction& predicted, std::uint64_t q) {
    const bool match = predicted.tree_pred == direct.tree &&
                       predicted.loops_pred == direct.loops &&
                       predicted.tail_pred == direct.profile.tail_k &&
                       predicted.period_pred == direct.profile.period_m;
    return json{{"command", "power"},
                {"q", q},
                {"base", analysis_json(base, false)},
                {"power_graph", analysis_json(direct, false)},
                {"predicted",
                 json{{"tail_k", predicted.tail_pred},
                      {"period_m", predicted.period_pred},
                      {"tree", predicted.tree_pred.to_string()},
                      {"loops", predicted.loops_pred.to_string()},
                      {"tree_windowed", predicted.tree_windowed.to_string()}}},
                {"prediction_match", match},
                {"tree_windowed_match", predicted.tree_windowed == direct.tree}};
}

json survey_json(const SurveyReport& report) {
    json per_n = json::array();
    for (auto [n, count] : report.per_n)
        per_n.push_back(json{{"n", n}, {"graphs", count}});
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(json{
            {"n", v.n}, {"edges", v.edges}, {"check", v.check}, {"detail", v.detail}});
    json targets = json::array();
    for (const auto& t : report.conjecture1) {
        json tj{{"tree", t.tree}, {"realized", t.realized}};
        if (t.realized) {
            tj["witness_n"] = t.witness_n;
            tj["witness_edges"] = t.witness_edges;
        }
        targets.push_back(tj);
    }
    return json{
        {"command", "survey"},
        {"max_n", report.max_n},
        {"per_n", per_n},
        {"graphs_checked", report.graphs_checked},
        {"trees", json(report.trees)},
        {"loops", json(report.loops)},
        {"violations", violations},
        {"conjecture_notes",
         json{{"condition3",
               json{{"conjunction_violations", report.cond3_conjunction_violations},
                    {"literal_violations", report.cond3_literal_violations}}},
              {"conjecture1", json{{"targets", targets}}}}}};
}

std::string analysis_text(const GraphAnalysis& analysis) {
    std::string out;
    out += "graph: n=" + std::to_string(analysis.graph.vertex_count()) + ", edges=[";
    bool first = true;
    for (auto [u, v] : analysis.graph.edges()) {
        if (!first)
            out += ", ";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    out += "]\n";
    out += "harmonic matrix:\n";
    for (std::size_t r = 0; r < analysis.a.dim(); ++r)
        out += "  " + analysis.a.row(r).to_string() + "\n";
    out += "tail_k: " + std::to_string(analysis.profile.tail_k) + "\n";
    out += "period_m: " + std::to_string(analysis.profile.period_m) + "\n";
    out += "dim_T: " + std::to_string(analysis.profile.dim_T) + "\n";
    out += "dim_L: " + std::to_string(analysis.profile.dim_L) + "\n";
    out += "tree: " + analysis.tree.to_string() + "\n";
    out += "loops: " + analysis.loops.to_string() + "\n";
    return out;
}

} // namespace harmolight
