#pragma once

#include "harmolight/bigint.hpp"
#include "harmolight/gf2.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace harmolight {

/// The cycle part of an evolution digraph: a multiset of loop lengths.
/// Rendered as "2L1 + L2" (empty ensemble: "L0").
class LoopEnsemble {
public:
    LoopEnsemble() = default;

    void add_loops(std::uint64_t length, std::uint64_t count);
    const std::map<std::uint64_t, std::uint64_t>& loops() const { return loops_; }

    std::uint64_t max_length() const { return loops_.empty() ? 0 : loops_.rbegin()->first; }
    std::uint64_t loop_count() const;
    /// Sum of length * count: total number of states on loops.
    BigUint state_count() const;

    std::string to_string() const;

    bool operator==(const LoopEnsemble&) const = default;

private:
    std::map<std::uint64_t, std::uint64_t> loops_; // length -> count >= 1
};

/// Moebius function: 1 at 1, (-1)^r on squarefree d with r prime factors,
/// 0 when a square divides d. Throws for d < 1.
int moebius(std::uint64_t d);

/// Divisors of m in increasing order (trial division).
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// lcm(a,b)/b = a/gcd(a,b). Throws for non-positive input.
std::uint64_t funny_div(std::uint64_t a, std::uint64_t b);

/// F_d = dim Ker(a^d + I), the dimension of the fixed space of a^d, for
/// every divisor d of period_m.
std::map<std::uint64_t, std::size_t> fixed_dims(const BitMatrix& a, std::uint64_t period_m);

/// Loop counts by Moebius inversion over the divisor lattice:
/// n_p = (1/p) * sum_{i|p} mu(p/i) * 2^{F_i}. Exact big-integer arithmetic;
/// throws on a negative or non-integer count.
LoopEnsemble loop_ensemble(const std::map<std::uint64_t, std::size_t>& fixed,
                           std::uint64_t period_m);

/// Bilinear loop product: single loops combine as
/// L_a * L_b = gcd(a,b) loops of length lcm(a,b).
LoopEnsemble loop_product(const LoopEnsemble& e1, const LoopEnsemble& e2);

/// The q-step jump transform: a length-a loop becomes gcd(a,q) loops of
/// length a/gcd(a,q).
LoopEnsemble q_hat(std::uint64_t q, const LoopEnsemble& e);

/// One signed symbolic term sign * F_index of a divisor-lattice expansion.
struct SignedTerm {
    long long coefficient = 0;
    std::uint64_t index = 0;
    bool operator==(const SignedTerm&) const = default;
};

/// The Moebius expansion of p * n_p: terms mu(p/i) * F_i over divisors i of
/// p with nonzero coefficient, in decreasing index order.
std::vector<SignedTerm> moebius_expansion(std::uint64_t p);

/// Inclusion-exclusion over the intersection algebra of the divisor ideals
/// [g] for the given generators g (all dividing top): the expansion of the
/// count of states whose rank divides top but none of the generators.
/// Terms appear in first-contribution order (subset size, then generator
/// order); equal indices aggregate.
std::vector<SignedTerm> divisor_ie_expansion(std::uint64_t top,
                                             const std::vector<std::uint64_t>& generators);

/// Maximal proper divisors of p (the covers of p from below in the divisor
/// lattice): p/q for each distinct prime q of p.
std::vector<std::uint64_t> maximal_proper_divisors(std::uint64_t p);

/// "F30 - F10 - F15 + F5" style rendering.
std::string render_expansion(const std::vector<SignedTerm>& terms);

/// Evaluate an expansion with 2^{F_i} substituted from the dimension map.
/// Throws if the signed sum goes negative.
BigUint evaluate_expansion(const std::vector<SignedTerm>& terms,
                           const std::map<std::uint64_t, std::size_t>& fixed);

} // namespace harmolight
