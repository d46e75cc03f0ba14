#include "harmolight/loops.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace harmolight {

void LoopEnsemble::add_loops(std::uint64_t length, std::uint64_t count) {
    if (count == 0)
        return;
    if (length == 0)
        throw std::invalid_argument("loop length must be positive");
    auto& slot = loops_[length];
    if (slot > UINT64_MAX - count)
        throw std::overflow_error("loop count overflow");
    slot += count;
}

std::uint64_t LoopEnsemble::loop_count() const {
    std::uint64_t total = 0;
    for (auto [len, cnt] : loops_) {
        if (total > UINT64_MAX - cnt)
            throw std::overflow_error("loop count overflow");
        total += cnt;
    }
    return total;
}

BigUint LoopEnsemble::state_count() const {
    BigUint total;
    for (auto [len, cnt] : loops_)
        total += BigUint::from_u128(static_cast<unsigned __int128>(len) *
                                    static_cast<unsigned __int128>(cnt));
    return total;
}

std::string LoopEnsemble::to_string() const {
    if (loops_.empty())
        return "L0";
    std::string s;
    for (auto [len, cnt] : loops_) {
        if (!s.empty())
            s += " + ";
        if (cnt > 1)
            s += std::to_string(cnt);
        s += "L" + std::to_string(len);
    }
    return s;
}

int moebius(std::uint64_t d) {
    if (d < 1)
        throw std::invalid_argument("moebius requires d >= 1");
    int primes = 0;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0)
                return 0;
            ++primes;
        }
    }
    if (d > 1)
        ++primes;
    return (primes & 1) ? -1 : 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    if (m < 1)
        throw std::invalid_argument("divisors requires m >= 1");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d)
                large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t funny_div(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("funny division requires positive integers");
    return a / std::gcd(a, b);
}

std::map<std::uint64_t, std::size_t> fixed_dims(const BitMatrix& a, std::uint64_t period_m) {
    std::map<std::uint64_t, std::size_t> out;
    const BitMatrix id = BitMatrix::identity(a.dim());
    for (std::uint64_t d : divisors(period_m))
        out[d] = kernel_dim(pow(a, d) + id);
    return out;
}

LoopEnsemble loop_ensemble(const std::map<std::uint64_t, std::size_t>& fixed,
                           std::uint64_t period_m) {
    LoopEnsemble ensemble;
    for (std::uint64_t p : divisors(period_m)) {
        BigUint positive, negative;
        for (std::uint64_t i : divisors(p)) {
            const int mu = moebius(p / i);
            if (mu == 0)
                continue;
            auto it = fixed.find(i);
            if (it == fixed.end())
                throw std::invalid_argument("fixed-space dimension missing for divisor " +
                                            std::to_string(i));
            if (mu > 0)
                positive += BigUint::pow2(it->second);
            else
                negative += BigUint::pow2(it->second);
        }
        if (positive < negative)
            throw std::runtime_error("negative loop count at length " + std::to_string(p));
        BigUint np = positive - negative;
        if (np.div_small(p) != 0)
            throw std::runtime_error("non-integer loop count at length " + std::to_string(p));
        if (!np.is_zero()) {
            if (!np.fits_u64())
                throw std::overflow_error("loop count exceeds 64 bits at length " +
                                          std::to_string(p));
            ensemble.add_loops(p, np.to_u64());
        }
    }
    return ensemble;
}

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t a_red = a / g;
    if (b != 0 && a_red > UINT64_MAX / b)
        throw std::overflow_error("lcm overflow");
    return a_red * b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("loop count overflow");
    return out;
}

} // namespace

LoopEnsemble loop_product(const LoopEnsemble& e1, const LoopEnsemble& e2) {
    LoopEnsemble out;
    for (auto [a, c] : e1.loops())
        for (auto [b, d] : e2.loops()) {
            const std::uint64_t count = checked_mul(checked_mul(c, d), std::gcd(a, b));
            out.add_loops(checked_lcm(a, b), count);
        }
    return out;
}

LoopEnsemble q_hat(std::uint64_t q, const LoopEnsemble& e) {
    if (q < 1)
        throw std::invalid_argument("q_hat requires q >= 1");
    LoopEnsemble out;
    for (auto [a, c] : e.loops())
        out.add_loops(funny_div(a, q), checked_mul(c, std::gcd(a, q)));
    return out;
}

std::vector<SignedTerm> moebius_expansion(std::uint64_t p) {
    std::vector<SignedTerm> terms;
    const auto divs = divisors(p);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        const int mu = moebius(p / *it);
        if (mu != 0)
            terms.push_back({mu, *it});
    }
    return terms;
}

std::vector<std::uint64_t> maximal_proper_divisors(std::uint64_t p) {
    std::vector<std::uint64_t> out;
    std::uint64_t rest = p;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q == 0) {
            out.push_back(p / q);
            while (rest % q == 0)
                rest /= q;
        }
    }
    if (rest > 1)
        out.push_back(p / rest);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<SignedTerm> divisor_ie_expansion(std::uint64_t top,
                                             const std::vector<std::uint64_t>& generators) {
    for (std::uint64_t g : generators)
        if (g == 0 || top % g != 0)
            throw std::invalid_argument("generators must divide the top element");

    // Accumulate signed coefficients per gcd of each generator subset, in
    // first-contribution order: the full set first, then singletons, pairs, ...
    std::vector<SignedTerm> terms{{1, top}};
    const std::size_t n = generators.size();
    auto contribute = [&terms](long long coef, std::uint64_t index) {
        for (auto& t : terms)
            if (t.index == index) {
                t.coefficient += coef;
                return;
            }
        terms.push_back({coef, index});
    };
    // Subsets ordered by size, then lexicographically over generator indices;
    // ascending bitmask order within a fixed popcount gives exactly that.
    if (n > 20)
        throw std::invalid_argument("too many generators for subset expansion");
    for (std::size_t size = 1; size <= n; ++size) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != size)
                continue;
            std::uint64_t g = 0;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1u)
                    g = std::gcd(g, generators[i]);
            contribute((size & 1) ? -1 : 1, g);
        }
    }
    std::erase_if(terms, [](const SignedTerm& t) { return t.coefficient == 0; });
    return terms;
}

std::string render_expansion(const std::vector<SignedTerm>& terms) {
    std::string s;
    for (const auto& t : terms) {
        if (t.coefficient == 0)
            continue;
        if (s.empty()) {
            if (t.coefficient < 0)
                s += "-";
        } else {
            s += t.coefficient < 0 ? " - " : " + ";
        }
        const long long mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        if (mag != 1)
            s += std::to_string(mag);
        s += "F" + std::to_string(t.index);
    }
    return s.empty() ? "0" : s;
}

BigUint evaluate_expansion(const std::vector<SignedTerm>& terms,
                           const std::map<std::uint64_t, std::size_t>& fixed) {
    BigUint positive, negative;
    for (const auto& t : terms) {
        auto it = fixed.find(t.index);
        if (it == fixed.end())
            throw std::invalid_argument("fixed-space dimension missing for divisor " +
                                        std::to_string(t.index));
        const long long mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        for (long long i = 0; i < mag; ++i) {
            if (t.coefficient > 0)
                positive += BigUint::pow2(it->second);
            else
                negative += BigUint::pow2(it->second);
        }
    }
    if (positive < negative)
        throw std::runtime_error("expansion evaluates to a negative count");
    return positive - negative;
}

} // namespace harmolight
