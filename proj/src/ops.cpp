#include "harmolight/ops.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace harmolight {

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const std::uint32_t shift = static_cast<std::uint32_t>(g1.vertex_count());
    std::vector<Edge> edges = g1.edges();
    edges.reserve(g1.edge_count() + g2.edge_count());
    for (auto [u, v] : g2.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

UnionPrediction union_prediction(const TreeFactorization& t1, const LoopEnsemble& l1,
                                 const TreeFactorization& t2, const LoopEnsemble& l2) {
    return {tree_product(t1, t2), loop_product(l1, l2)};
}

Graph power_graph(const Graph& g, std::uint64_t q) {
    if (q < 1)
        throw std::invalid_argument("power requires q >= 1");
    return graph_from_harmonic(pow(harmonic_matrix(g), q));
}

PowerPrediction power_prediction(const MonoidProfile& profile, const TreeFactorization& tree,
                                 const LoopEnsemble& loops, std::uint64_t q) {
    if (q < 1)
        throw std::invalid_argument("power requires q >= 1");
    PowerPrediction p;
    p.tail_pred = static_cast<std::size_t>((profile.tail_k + q - 1) / q);
    p.period_pred = funny_div(profile.period_m, q);
    p.loops_pred = q_hat(q, loops);

    for (auto [height, mult] : tree.factors()) {
        const std::uint64_t s = height / q;
        const std::uint64_t r = height % q;
        p.tree_pred.add_factor(static_cast<std::size_t>(s + 1), r * mult);
        if (s > 0)
            p.tree_pred.add_factor(static_cast<std::size_t>(s), (q - r) * mult);
    }

    const std::size_t k_pred = p.tail_pred;
    for (std::size_t i = 1; i <= k_pred; ++i) {
        std::uint64_t w = 0;
        for (std::uint64_t j = q * (i - 1) + 1; j <= q * i; ++j) {
            auto it = tree.factors().find(static_cast<std::size_t>(j));
            if (it != tree.factors().end())
                w += j * it->second;
        }
        p.tree_windowed.add_factor(i, w);
    }
    return p;
}

} // namespace harmolight
