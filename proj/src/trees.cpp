#include "harmolight/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace harmolight {

void TreeFactorization::add_factor(std::size_t height, std::uint64_t multiplicity) {
    if (height == 0 || multiplicity == 0)
        return; // I_0 is the unit; zero multiplicity is absence
    factors_[height] += multiplicity;
}

std::uint64_t TreeFactorization::total_dim() const {
    std::uint64_t sum = 0;
    for (auto [h, b] : factors_)
        sum += h * b;
    return sum;
}

std::uint64_t TreeFactorization::factor_count() const {
    std::uint64_t sum = 0;
    for (auto [h, b] : factors_)
        sum += b;
    return sum;
}

std::size_t TreeFactorization::max_height() const {
    return factors_.empty() ? 0 : factors_.rbegin()->first;
}

std::string TreeFactorization::to_string() const {
    if (factors_.empty())
        return "I0";
    std::string s;
    for (auto [h, b] : factors_) {
        if (!s.empty())
            s += " * ";
        s += "I" + std::to_string(h);
        if (b > 1)
            s += "^" + std::to_string(b);
    }
    return s;
}

std::vector<std::size_t> kernel_filtration(const BitMatrix& a, std::size_t tail_k) {
    std::vector<std::size_t> ks;
    ks.reserve(tail_k);
    BitMatrix p = a;
    for (std::size_t j = 1; j <= tail_k; ++j) {
        ks.push_back(kernel_dim(p));
        if (j < tail_k)
            p = p * a;
    }
    return ks;
}

TreeFactorization tree_factorization(std::span<const std::size_t> filtration) {
    TreeFactorization tree;
    const std::size_t k = filtration.size();
    for (std::size_t j = 1; j <= k; ++j) {
        const long long kj = static_cast<long long>(filtration[j - 1]);
        const long long k_prev = j >= 2 ? static_cast<long long>(filtration[j - 2]) : 0;
        const long long k_next =
            j < k ? static_cast<long long>(filtration[j]) : static_cast<long long>(filtration[k - 1]);
        const long long nj = 2 * kj - k_next - k_prev;
        if (nj < 0)
            throw std::invalid_argument("invalid kernel filtration: negative multiplicity at height " +
                                        std::to_string(j));
        tree.add_factor(j, static_cast<std::uint64_t>(nj));
    }
    return tree;
}

std::vector<std::size_t> kernel_filtration_of(const TreeFactorization& tree) {
    const std::size_t k = tree.max_height();
    std::vector<std::size_t> ks(k, 0);
    for (std::size_t j = 1; j <= k; ++j) {
        std::uint64_t kj = 0;
        for (auto [h, b] : tree.factors())
            kj += std::min<std::uint64_t>(h, j) * b;
        ks[j - 1] = static_cast<std::size_t>(kj);
    }
    return ks;
}

TreeFactorization tree_product(const TreeFactorization& t1, const TreeFactorization& t2) {
    TreeFactorization out = t1;
    for (auto [h, b] : t2.factors())
        out.add_factor(h, b);
    return out;
}

std::uint64_t tree_node_count(const TreeFactorization& t) {
    const std::uint64_t d = t.total_dim();
    if (d >= 64)
        throw std::overflow_error("tree node count exceeds 64 bits");
    return std::uint64_t{1} << d;
}

} // namespace harmolight
