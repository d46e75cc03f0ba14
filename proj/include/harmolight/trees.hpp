#pragma once

#include "harmolight/gf2.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace harmolight {

/// The nilpotent part of an evolution digraph in factored form: a multiset
/// of binomial-tree heights. Rendered as "I1^3 * I2" (empty product: "I0").
class TreeFactorization {
public:
    TreeFactorization() = default;

    void add_factor(std::size_t height, std::uint64_t multiplicity);
    const std::map<std::size_t, std::uint64_t>& factors() const { return factors_; }

    /// Sum of height * multiplicity: the dimension the tree spans.
    std::uint64_t total_dim() const;
    /// Number of binomial-tree factors (equals dim Ker a for a graph's tree).
    std::uint64_t factor_count() const;
    std::size_t max_height() const;

    std::string to_string() const;

    bool operator==(const TreeFactorization&) const = default;

private:
    std::map<std::size_t, std::uint64_t> factors_; // height -> multiplicity >= 1
};

/// K_j = dim Ker a^j for j = 1..tail_k. Non-decreasing and concave.
std::vector<std::size_t> kernel_filtration(const BitMatrix& a, std::size_t tail_k);

/// Multiplicities from the filtration: n_j = 2K_j - K_{j+1} - K_{j-1}, with
/// K_0 = 0 and K_{k+1} = K_k. Throws if any multiplicity comes out negative.
TreeFactorization tree_factorization(std::span<const std::size_t> filtration);

/// The forward system K_j = sum_i min(i,j) * b_i, for j = 1..max height.
/// Inverse of tree_factorization; round-trips exactly.
std::vector<std::size_t> kernel_filtration_of(const TreeFactorization& tree);

/// Free-commutative-monoid product: pointwise sum of multiplicities.
TreeFactorization tree_product(const TreeFactorization& t1, const TreeFactorization& t2);

/// 2^(total dimension): number of states the tree carries.
std::uint64_t tree_node_count(const TreeFactorization& t);

} // namespace harmolight
