#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmolight {

/// Unsigned arbitrary-precision integer, just big enough for exact loop
/// counting: sums and differences of powers of two, division by a small
/// integer with an exactness check.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v) {
        if (v != 0)
            limbs_.push_back(v);
    }
    static BigUint pow2(std::size_t e) {
        BigUint b;
        b.limbs_.assign(e / 64 + 1, 0);
        b.limbs_.back() = std::uint64_t{1} << (e % 64);
        return b;
    }
    static BigUint from_u128(unsigned __int128 v) {
        BigUint b;
        if (v != 0)
            b.limbs_.push_back(static_cast<std::uint64_t>(v));
        if ((v >> 64) != 0)
            b.limbs_.push_back(static_cast<std::uint64_t>(v >> 64));
        return b;
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs) {
        if (rhs.limbs_.size() > limbs_.size())
            limbs_.resize(rhs.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint64_t r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
            const std::uint64_t before = limbs_[i];
            limbs_[i] = before + r + carry;
            carry = (limbs_[i] < before || (carry && limbs_[i] == before)) ? 1 : 0;
        }
        if (carry)
            limbs_.push_back(1);
        return *this;
    }

    /// Throws std::underflow_error if rhs > *this.
    BigUint& operator-=(const BigUint& rhs) {
        if (*this < rhs)
            throw std::underflow_error("BigUint subtraction underflow");
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint64_t r = i < rhs.limbs_.size() ? rhs.limbs_[i] : 0;
            const std::uint64_t before = limbs_[i];
            limbs_[i] = before - r - borrow;
            borrow = (before < r || (borrow && before == r)) ? 1 : 0;
        }
        trim();
        return *this;
    }

    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }
    friend BigUint operator-(BigUint lhs, const BigUint& rhs) { return lhs -= rhs; }

    /// In-place division by a nonzero 64-bit divisor; returns the remainder.
    std::uint64_t div_small(std::uint64_t d) {
        if (d == 0)
            throw std::invalid_argument("division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            const unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint64_t>(rem);
    }

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const {
        if (!fits_u64())
            throw std::overflow_error("BigUint does not fit in 64 bits");
        return limbs_.empty() ? 0 : limbs_[0];
    }

    bool operator==(const BigUint&) const = default;
    std::strong_ordering operator<=>(const BigUint& rhs) const {
        if (limbs_.size() != rhs.limbs_.size())
            return limbs_.size() <=> rhs.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != rhs.limbs_[i])
                return limbs_[i] <=> rhs.limbs_[i];
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        BigUint tmp = *this;
        std::string digits;
        while (!tmp.is_zero()) {
            const std::uint64_t r = tmp.div_small(10);
            digits.push_back(static_cast<char>('0' + r));
        }
        return {digits.rbegin(), digits.rend()};
    }

    /// True when exactly one bit is set; the exponent goes to *exponent.
    bool is_pow2(std::size_t* exponent = nullptr) const {
        std::size_t seen = 0, pos = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t w = limbs_[i];
            while (w != 0) {
                if (++seen > 1)
                    return false;
                std::size_t b = 0;
                while (((w >> b) & 1u) == 0)
                    ++b;
                pos = i * 64 + b;
                w &= w - 1;
            }
        }
        if (seen != 1)
            return false;
        if (exponent)
            *exponent = pos;
        return true;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_; // little-endian, no trailing zero limbs
};

} // namespace harmolight
