#pragma once

#include "harmolight/graphs.hpp"
#include "harmolight/loops.hpp"
#include "harmolight/monoid.hpp"
#include "harmolight/trees.hpp"

#include <cstdint>

namespace harmolight {

/// Vertices of g2 are relabeled to follow those of g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct UnionPrediction {
    TreeFactorization tree;
    LoopEnsemble loops;
};

/// Evolution structure of a disjoint union from the parts: tree product and
/// loop product.
UnionPrediction union_prediction(const TreeFactorization& t1, const LoopEnsemble& l1,
                                 const TreeFactorization& t2, const LoopEnsemble& l2);

/// The graph whose harmonic matrix is a^q; well-defined because powers stay
/// symmetric with even row sums.
Graph power_graph(const Graph& g, std::uint64_t q);

struct PowerPrediction {
    std::size_t tail_pred = 0;       // ceil(tail_k / q)
    std::uint64_t period_pred = 1;   // period_m / gcd(period_m, q)
    LoopEnsemble loops_pred;         // q_hat(q, loops)
    TreeFactorization tree_pred;     // nilpotent block splitting under q-step jumps
    TreeFactorization tree_windowed; // window-sum multiplicity variant, reported only
};

/// Predicted structure of the q-th power graph. tree_pred splits each
/// height-j factor, j = q*s + r with 0 <= r < q, into r factors of height
/// s+1 and q-r of height s (height 0 dropped). tree_windowed evaluates the
/// alternative rule w_i = sum_{j=q(i-1)+1..q*i} j*b_j; it is carried in
/// reports for comparison and is not asserted anywhere.
PowerPrediction power_prediction(const MonoidProfile& profile, const TreeFactorization& tree,
                                 const LoopEnsemble& loops, std::uint64_t q);

} // namespace harmolight
