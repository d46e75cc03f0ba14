#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace harmolight {

/// Vector over GF(2), bit-packed into 64-bit words. Addition is XOR.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : len_(length), words_(word_count(length), 0) {}

    /// Parse from a string of '0'/'1' characters; index 0 is the first character.
    static BitVector from_string(std::string_view bits);
    /// Low 'length' bits of 'mask' (bit i of the mask becomes coordinate i).
    static BitVector from_mask(std::size_t length, std::uint64_t mask);
    static BitVector random(std::size_t length, std::mt19937_64& rng);

    std::size_t length() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    std::size_t popcount() const;
    bool is_zero() const;
    /// Coordinates as an integer mask (bit i = coordinate i); length() must be <= 64.
    std::uint64_t to_mask() const;
    std::string to_string() const;
    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const BitVector&) const = default;

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Square matrix over GF(2) with bit-packed rows. All arithmetic is mod 2.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t dim)
        : dim_(dim), wpr_((dim + 63) / 64), words_(dim * wpr_, 0) {}

    static BitMatrix identity(std::size_t dim);
    /// Rows must all have length equal to the number of rows.
    static BitMatrix from_rows(const std::vector<BitVector>& rows);
    static BitMatrix random(std::size_t dim, std::mt19937_64& rng);

    std::size_t dim() const { return dim_; }
    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (value)
            words_[r * wpr_ + (c >> 6)] |= bit;
        else
            words_[r * wpr_ + (c >> 6)] &= ~bit;
    }

    BitVector row(std::size_t r) const;
    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) {
        return {words_.data() + r * wpr_, wpr_};
    }

    BitMatrix& operator+=(const BitMatrix& rhs);
    friend BitMatrix operator+(BitMatrix lhs, const BitMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }

    BitMatrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;
    std::string to_string() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);
BitVector operator*(const BitMatrix& m, const BitVector& v);

/// m^t with t = 0 giving the identity. Square-and-multiply.
BitMatrix pow(const BitMatrix& m, std::uint64_t t);
/// [m^1, m^2, ..., m^t] by iterated multiplication; the caller keeps the whole ladder.
std::vector<BitMatrix> power_sequence(const BitMatrix& m, std::size_t t);

/// Rank over GF(2) by row-XOR elimination.
std::size_t rank(const BitMatrix& m);
std::size_t kernel_dim(const BitMatrix& m);

/// Rank of an arbitrary list of equal-length vectors.
std::size_t rank_of_rows(const std::vector<BitVector>& rows);
/// Basis of the row space (nonzero rows of the echelon form).
std::vector<BitVector> row_space_basis(const BitMatrix& m);
/// Basis of the column space.
std::vector<BitVector> column_space_basis(const BitMatrix& m);
/// Basis of the null space {x : m x = 0}.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

} // namespace harmolight
