#include "harmolight/monoid.hpp"

#include <stdexcept>
#include <utility>

namespace harmolight {

MonoidProfile monoid_profile(const BitMatrix& a, std::uint64_t iteration_cap) {
    const std::size_t n = a.dim();
    MonoidProfile profile;

    // rank(a^t) is strictly decreasing until the nilpotent part dies, then
    // constant; the first repeat pins tail_k.
    BitMatrix prev = BitMatrix::identity(n);
    std::size_t prev_rank = n;
    BitMatrix cur = a;
    std::size_t t = 1;
    while (true) {
        const std::size_t r = rank(cur);
        if (r == prev_rank) {
            profile.tail_k = t - 1;
            break;
        }
        prev = cur;
        prev_rank = r;
        cur = cur * a;
        ++t;
    }
    profile.dim_L = prev_rank;
    profile.dim_T = n - prev_rank;

    // Cycle detection on the stabilized power sequence; prev == a^{tail_k}.
    const BitMatrix& base = prev;
    BitMatrix walker = base * a;
    std::uint64_t m = 1;
    while (!(walker == base)) {
        if (m >= iteration_cap)
            throw std::runtime_error("period search exceeded iteration cap (" +
                                     std::to_string(iteration_cap) + ")");
        walker = walker * a;
        ++m;
    }
    profile.period_m = m;
    return profile;
}

BitMatrix projection(const BitMatrix& a, const MonoidProfile& profile) {
    if (profile.tail_k == 0)
        return BitMatrix::identity(a.dim());
    const std::uint64_t m = profile.period_m;
    const std::uint64_t t = m * ((profile.tail_k + m - 1) / m);
    return pow(a, t);
}

Decomposition decompose(const BitMatrix& a) {
    const MonoidProfile profile = monoid_profile(a);
    const BitMatrix pi = projection(a, profile);
    Decomposition d;
    d.dim_L = rank(pi);
    d.dim_T = a.dim() - d.dim_L;
    d.loop_basis = column_space_basis(pi);
    return d;
}

} // namespace harmolight
