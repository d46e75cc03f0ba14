// harmolight: analyze the harmonic (mod-2 Laplacian) evolution of a graph.
//
// Subcommands: analyze, evolve, digraph, union, power, survey. Graph inputs
// are edge-list files ("n=<int>" header, one "<u> <v>" pair per line) or
// one-line graph6 strings; "-" reads stdin. Machine output is JSON on
// stdout. Exit codes: 0 ok, 1 error, 2 invariant violation.

#include "harmolight/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using harmolight::Graph;
using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return harmolight::parse_graph(read_input(path)); }

std::uint64_t default_state_limit() {
    if (const char* env = std::getenv("HARMOLIGHT_STATE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
        std::cerr << "warning: ignoring malformed HARMOLIGHT_STATE_LIMIT\n";
    }
    return harmolight::kDefaultStateLimit;
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "text")
        std::cout << text;
    else
        std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic evolution analyzer for finite simple graphs"};
    app.require_subcommand(1);

    std::string input, input2, state_bits, format = "json";
    std::uint64_t state_limit = default_state_limit();
    std::uint64_t max_steps = harmolight::kDefaultMaxSteps;
    std::uint64_t q = 1;
    unsigned workers = 1;
    int max_n = 5;
    bool verify = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--state-limit", state_limit, "max states for exhaustive enumeration");
        cmd->add_option("--workers", workers, "worker threads");
    };

    auto* analyze = app.add_subcommand("analyze", "tree and loop structure of a graph");
    analyze->add_option("input", input, "graph file or -")->required();
    analyze->add_flag("--verify", verify, "cross-check against exhaustive enumeration");
    add_common(analyze);

    auto* evolve = app.add_subcommand("evolve", "trace one state forward");
    evolve->add_option("input", input, "graph file or -")->required();
    evolve->add_option("--state", state_bits, "initial state as a bitstring")->required();
    evolve->add_option("--max-steps", max_steps, "abort if no cycle closes within this many steps");
    evolve->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    auto* digraph = app.add_subcommand("digraph", "full evolution digraph as DOT");
    digraph->add_option("input", input, "graph file or -")->required();
    digraph->add_option("--state-limit", state_limit, "max states for exhaustive enumeration");
    digraph->add_option("--workers", workers, "worker threads");

    auto* union_cmd = app.add_subcommand("union", "disjoint union with prediction cross-check");
    union_cmd->add_option("first", input, "graph file or -")->required();
    union_cmd->add_option("second", input2, "graph file")->required();
    union_cmd->add_flag("--verify", verify, "cross-check against exhaustive enumeration");
    add_common(union_cmd);

    auto* power = app.add_subcommand("power", "power graph with prediction cross-check");
    power->add_option("input", input, "graph file or -")->required();
    power->add_option("-q,--exponent", q, "power exponent (>= 1)")->required();
    power->add_flag("--verify", verify, "cross-check against exhaustive enumeration");
    add_common(power);

    auto* survey = app.add_subcommand("survey", "sweep all labeled graphs up to a size");
    survey->add_option("--max-n", max_n, "largest vertex count to enumerate")->required();
    survey->add_option("--workers", workers, "worker threads");
    survey->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const auto analysis = harmolight::analyze_graph(load_graph(input));
            json j = harmolight::analysis_json(analysis);
            j["command"] = "analyze";
            bool ok = true;
            if (verify) {
                const auto d = harmolight::brute_digraph(analysis.graph, state_limit, workers);
                const auto cmp = harmolight::verify_against_oracle(analysis, d);
                j["verification"] = harmolight::verification_json(cmp);
                ok = cmp.ok();
            }
            std::string text = harmolight::analysis_text(analysis);
            if (verify)
                text += std::string("verified: ") + (ok ? "true" : "false") + "\n";
            emit(j, format, text);
            return ok ? 0 : kExitViolation;
        }
        if (*evolve) {
            const Graph g = load_graph(input);
            const auto s = harmolight::State::from_string(state_bits);
            if (s.length() != g.vertex_count())
                throw std::invalid_argument("state bitstring length " +
                                            std::to_string(s.length()) +
                                            " does not match vertex count " +
                                            std::to_string(g.vertex_count()));
            const auto trace = harmolight::evolve(g, s, max_steps, true);
            std::string text = "preperiod: " + std::to_string(trace.preperiod) +
                               "\ncycle_length: " + std::to_string(trace.cycle_length) + "\n";
            for (const auto& st : trace.trajectory)
                text += "  " + st.to_string() + "\n";
            emit(harmolight::trace_json(trace), format, text);
            return 0;
        }
        if (*digraph) {
            const Graph g = load_graph(input);
            const auto d = harmolight::brute_digraph(g, state_limit, workers);
            std::cout << harmolight::export_dot(d);
            return 0;
        }
        if (*union_cmd) {
            const auto a1 = harmolight::analyze_graph(load_graph(input));
            const auto a2 = harmolight::analyze_graph(load_graph(input2));
            const Graph u = harmolight::disjoint_union(a1.graph, a2.graph);
            const auto direct = harmolight::analyze_graph(u);
            const auto predicted =
                harmolight::union_prediction(a1.tree, a1.loops, a2.tree, a2.loops);
            json j = harmolight::union_report_json(a1, a2, direct, predicted);
            bool ok = j["prediction_match"].get<bool>();
            if (verify) {
                const auto d = harmolight::brute_digraph(u, state_limit, workers);
                const auto cmp = harmolight::verify_against_oracle(direct, d);
                j["verification"] = harmolight::verification_json(cmp);
                ok = ok && cmp.ok();
            }
            std::string text = harmolight::analysis_text(direct);
            text += "predicted tree: " + predicted.tree.to_string() + "\n";
            text += "predicted loops: " + predicted.loops.to_string() + "\n";
            text += std::string("prediction_match: ") + (ok ? "true" : "false") + "\n";
            emit(j, format, text);
            return ok ? 0 : kExitViolation;
        }
        if (*power) {
            const auto base = harmolight::analyze_graph(load_graph(input));
            const auto direct = harmolight::analyze_graph(harmolight::power_graph(base.graph, q));
            const auto predicted =
                harmolight::power_prediction(base.profile, base.tree, base.loops, q);
            json j = harmolight::power_report_json(base, direct, predicted, q);
            bool ok = j["prediction_match"].get<bool>();
            if (verify) {
                const auto d = harmolight::brute_digraph(direct.graph, state_limit, workers);
                const auto cmp = harmolight::verify_against_oracle(direct, d);
                j["verification"] = harmolight::verification_json(cmp);
                ok = ok && cmp.ok();
            }
            std::string text = harmolight::analysis_text(direct);
            text += "predicted tree: " + predicted.tree_pred.to_string() + "\n";
            text += "predicted loops: " + predicted.loops_pred.to_string() + "\n";
            text += std::string("prediction_match: ") + (ok ? "true" : "false") + "\n";
            emit(j, format, text);
            return ok ? 0 : kExitViolation;
        }
        if (*survey) {
            const auto report = harmolight::run_survey(max_n, workers);
            const json j = harmolight::survey_json(report);
            std::string text = "graphs checked: " + std::to_string(report.graphs_checked) +
                               "\nviolations: " + std::to_string(report.violations.size()) + "\n";
            emit(j, format, text);
            return report.violations.empty() ? 0 : kExitViolation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
