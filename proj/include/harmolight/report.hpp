#pragma once

#include "harmolight/dynamics.hpp"
#include "harmolight/graphs.hpp"
#include "harmolight/monoid.hpp"
#include "harmolight/ops.hpp"
#include "harmolight/survey.hpp"
#include "harmolight/trees.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace harmolight {

/// Everything the algebraic pipeline derives from one graph.
struct GraphAnalysis {
    Graph graph;
    BitMatrix a;
    MonoidProfile profile;
    std::vector<std::size_t> filtration;
    TreeFactorization tree;
    LoopEnsemble loops;
};

GraphAnalysis analyze_graph(const Graph& g);

/// Cross-check of the algebraic results against exhaustive enumeration.
struct OracleComparison {
    bool loops_match = false;
    bool kernel_counts_match = false;
    bool cycle_states_match = false;
    bool nilpotent_states_match = false;
    bool ok() const {
        return loops_match && kernel_counts_match && cycle_states_match && nilpotent_states_match;
    }
};

OracleComparison verify_against_oracle(const GraphAnalysis& analysis,
                                       const EvolutionDigraph& digraph);

nlohmann::json graph_json(const Graph& g);
nlohmann::json analysis_json(const GraphAnalysis& analysis, bool include_matrix = true);
nlohmann::json verification_json(const OracleComparison& cmp);
nlohmann::json trace_json(const TraceResult& trace, bool include_trajectory = true);
nlohmann::json union_report_json(const GraphAnalysis& g1, const GraphAnalysis& g2,
                                 const GraphAnalysis& direct, const UnionPrediction& predicted);
nlohmann::json power_report_json(const GraphAnalysis& base, const GraphAnalysis& direct,
                                 const PowerPrediction& predicted, std::uint64_t q);
nlohmann::json survey_json(const SurveyReport& report);

/// Plain-text rendering of an analysis report.
std::string analysis_text(const GraphAnalysis& analysis);

} // namespace harmolight
