#include "harmolight/survey.hpp"

#include "harmolight/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace harmolight {

std::uint64_t labeled_graph_count(int n) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    if (pairs >= 63)
        throw std::invalid_argument("too many vertices to enumerate labeled graphs");
    return std::uint64_t{1} << pairs;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (std::uint32_t u = 0; u + 1 < static_cast<std::uint32_t>(n); ++u)
        for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(n); ++v, ++bit)
            if ((mask >> bit) & 1u)
                edges.emplace_back(u, v);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

GraphEnumeration::GraphEnumeration(int n, int max_n) : n_(n) {
    if (n < 0 || n > max_n)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " exceeds enumeration limit " + std::to_string(max_n));
}

namespace {

bool is_pow2_u64(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

AdmissibilityVerdict admissibility(const LoopEnsemble& e) {
    AdmissibilityVerdict verdict;
    const auto& loops = e.loops();

    auto count_at = [&](std::uint64_t len) -> std::uint64_t {
        auto it = loops.find(len);
        return it == loops.end() ? 0 : it->second;
    };

    verdict.cond1 = is_pow2_u64(count_at(1));

    verdict.cond2 = true;
    for (auto [p, cnt] : loops) {
        (void)cnt;
        BigUint sum;
        for (std::uint64_t i : divisors(p))
            sum += BigUint::from_u128(static_cast<unsigned __int128>(i) *
                                      static_cast<unsigned __int128>(count_at(i)));
        if (!sum.is_pow2())
            verdict.cond2 = false;
    }

    verdict.cond3 = true;
    for (auto [i, ci] : loops) {
        (void)ci;
        for (auto [j, cj] : loops) {
            (void)cj;
            const std::uint64_t g = std::gcd(i, j);
            if (j != 0 && (i / g) > UINT64_MAX / j) {
                verdict.cond3 = false;
                continue;
            }
            if (count_at(i / g * j) == 0)
                verdict.cond3 = false;
        }
    }

    std::size_t exponent = 0;
    verdict.cond4 = e.state_count().is_pow2(&exponent) && exponent % 2 == 0;

    verdict.admissible = verdict.cond1 && verdict.cond2 && verdict.cond3 && verdict.cond4;
    return verdict;
}

bool condition3_literal(const LoopEnsemble& e) {
    const auto& loops = e.loops();
    if (loops.empty())
        return true;
    const auto divs = divisors(e.max_length());
    auto present = [&](std::uint64_t len) { return loops.find(len) != loops.end(); };
    for (std::uint64_t i : divs)
        for (std::uint64_t j : divs) {
            if (!present(i) && !present(j))
                continue;
            if (!present(i / std::gcd(i, j) * j))
                return false;
        }
    return true;
}

namespace {

// All height multisets with total dimension 1..max_dim, as factorizations.
std::vector<TreeFactorization> small_tree_targets(std::uint64_t max_dim) {
    std::vector<TreeFactorization> out;
    std::vector<std::size_t> parts;
    auto emit = [&out](const std::vector<std::size_t>& ps) {
        TreeFactorization t;
        for (std::size_t h : ps)
            t.add_factor(h, 1);
        out.push_back(std::move(t));
    };
    // Partitions in non-increasing part order, recursively.
    auto rec = [&](auto&& self, std::uint64_t remaining, std::size_t max_part) -> void {
        if (remaining == 0) {
            emit(parts);
            return;
        }
        for (std::size_t p = std::min<std::uint64_t>(max_part, remaining); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    for (std::uint64_t d = 1; d <= max_dim; ++d)
        rec(rec, d, static_cast<std::size_t>(d));
    return out;
}

struct GraphStructure {
    MonoidProfile profile;
    TreeFactorization tree;
    LoopEnsemble loops;
};

GraphStructure analyze_mask(int n, std::uint64_t mask) {
    GraphStructure s;
    const Graph g = graph_from_edge_mask(n, mask);
    const BitMatrix a = harmonic_matrix(g);
    s.profile = monoid_profile(a);
    s.tree = tree_factorization(kernel_filtration(a, s.profile.tail_k));
    s.loops = loop_ensemble(fixed_dims(a, s.profile.period_m), s.profile.period_m);
    return s;
}

struct Witness {
    bool found = false;
    int n = 0;
    std::uint64_t mask = 0;
};

void merge_witness(Witness& into, const Witness& from) {
    if (!from.found)
        return;
    if (!into.found || std::pair{from.n, from.mask} < std::pair{into.n, into.mask})
        into = from;
}

struct Partial {
    std::set<std::string> trees, loops;
    std::vector<SurveyViolation> violations;
    std::uint64_t graphs_checked = 0;
    std::uint64_t cond3_conj_viol = 0;
    std::uint64_t cond3_lit_viol = 0;
    std::vector<Witness> witnesses;
};

} // namespace

SurveyReport run_survey(int max_n, unsigned workers, int max_allowed) {
    if (max_n < 1)
        throw std::invalid_argument("survey requires max_n >= 1");
    if (max_n > max_allowed)
        throw std::invalid_argument("max_n " + std::to_string(max_n) +
                                    " exceeds enumeration limit " + std::to_string(max_allowed));
    if (workers < 1)
        workers = 1;

    const auto targets = small_tree_targets(4);
    std::vector<std::string> target_names;
    target_names.reserve(targets.size());
    for (const auto& t : targets)
        target_names.push_back(t.to_string());

    // Fixed-size task list: one slot per (n, chunk); merged in slot order so
    // the outcome does not depend on scheduling.
    struct Task {
        int n;
        std::uint64_t begin, end;
    };
    std::vector<Task> tasks;
    for (int n = 1; n <= max_n; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        const std::uint64_t chunk = std::max<std::uint64_t>(1, (total + workers - 1) / workers);
        for (std::uint64_t b = 0; b < total; b += chunk)
            tasks.push_back({n, b, std::min(b + chunk, total)});
    }

    std::vector<Partial> partials(tasks.size());
    auto run_task = [&](std::size_t ti) {
        const Task& task = tasks[ti];
        Partial& part = partials[ti];
        part.witnesses.assign(targets.size(), {});
        for (std::uint64_t mask = task.begin; mask < task.end; ++mask) {
            const GraphStructure s = analyze_mask(task.n, mask);
            ++part.graphs_checked;

            auto violation = [&](const char* check, std::string detail) {
                part.violations.push_back({task.n,
                                           to_edge_list(graph_from_edge_mask(task.n, mask)),
                                           check, std::move(detail)});
            };

            if (s.profile.dim_L % 2 != 0)
                violation("dim_L even", "dim_L = " + std::to_string(s.profile.dim_L));
            for (auto [len, cnt] : s.loops.loops()) {
                (void)cnt;
                if (s.profile.period_m % len != 0)
                    violation("loop lengths divide period",
                              "length " + std::to_string(len) + " vs period " +
                                  std::to_string(s.profile.period_m));
            }
            if (s.loops.max_length() != s.profile.period_m)
                violation("loop of full period exists",
                          "max length " + std::to_string(s.loops.max_length()) + " vs period " +
                              std::to_string(s.profile.period_m));

            const AdmissibilityVerdict verdict = admissibility(s.loops);
            if (!verdict.cond1)
                violation("admissibility condition 1", s.loops.to_string());
            if (!verdict.cond2)
                violation("admissibility condition 2", s.loops.to_string());
            if (!verdict.cond4)
                violation("admissibility condition 4", s.loops.to_string());
            if (!verdict.cond3)
                ++part.cond3_conj_viol;
            if (!condition3_literal(s.loops))
                ++part.cond3_lit_viol;

            const std::string tree_name = s.tree.to_string();
            part.trees.insert(tree_name);
            part.loops.insert(s.loops.to_string());
            for (std::size_t t = 0; t < targets.size(); ++t)
                if (!part.witnesses[t].found && tree_name == target_names[t])
                    part.witnesses[t] = {true, task.n, mask};
        }
    };

    if (workers == 1) {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti)
            run_task(ti);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t ti = next.fetch_add(1);
                    if (ti >= tasks.size())
                        return;
                    run_task(ti);
                }
            });
        for (auto& t : pool)
            t.join();
    }

    SurveyReport report;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n)
        report.per_n.emplace_back(n, labeled_graph_count(n));
    std::vector<Witness> witnesses(targets.size());
    for (const auto& part : partials) {
        report.trees.insert(part.trees.begin(), part.trees.end());
        report.loops.insert(part.loops.begin(), part.loops.end());
        report.violations.insert(report.violations.end(), part.violations.begin(),
                                 part.violations.end());
        report.graphs_checked += part.graphs_checked;
        report.cond3_conjunction_violations += part.cond3_conj_viol;
        report.cond3_literal_violations += part.cond3_lit_viol;
        for (std::size_t t = 0; t < targets.size(); ++t)
            merge_witness(witnesses[t], part.witnesses[t]);
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
        TreeTarget target;
        target.tree = target_names[t];
        target.realized = witnesses[t].found;
        if (witnesses[t].found) {
            target.witness_n = witnesses[t].n;
            target.witness_edges = to_edge_list(graph_from_edge_mask(witnesses[t].n,
                                                                     witnesses[t].mask));
        }
        report.conjecture1.push_back(std::move(target));
    }
    return report;
}

} // namespace harmolight
