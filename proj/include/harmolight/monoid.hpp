#pragma once

#include "harmolight/gf2.hpp"

#include <cstdint>
#include <vector>

namespace harmolight {

/// Structure constants of the monoid {1, a, a^2, ...}: the power sequence
/// enters a cycle after tail_k steps and repeats with period period_m.
struct MonoidProfile {
    std::size_t tail_k = 0;     // least t with rank(a^t) = rank(a^{t+1})
    std::uint64_t period_m = 1; // least m >= 1 with a^{tail_k+m} = a^{tail_k}
    std::size_t dim_T = 0;      // n - rank(a^{tail_k})
    std::size_t dim_L = 0;      // rank(a^{tail_k})
};

inline constexpr std::uint64_t kPeriodIterationCap = std::uint64_t{1} << 20;

/// Tail by rank stabilization of successive powers, period by cycle
/// detection on the power sequence. Throws if the period search exceeds
/// iteration_cap.
MonoidProfile monoid_profile(const BitMatrix& a,
                             std::uint64_t iteration_cap = kPeriodIterationCap);

/// The idempotent pi = a^t for the least multiple t of period_m with
/// t >= tail_k (t = 0 gives the identity when the matrix is invertible).
BitMatrix projection(const BitMatrix& a, const MonoidProfile& profile);

/// V = Ker(pi) + Im(pi): nilpotent part dimension, cyclic part dimension,
/// and a basis of the cyclic part (column space of pi).
struct Decomposition {
    std::size_t dim_T = 0;
    std::size_t dim_L = 0;
    std::vector<BitVector> loop_basis;
};

Decomposition decompose(const BitMatrix& a);

} // namespace harmolight
