#include "harmolight/gf2.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace harmolight;

namespace {

BitMatrix from_bits(std::initializer_list<std::initializer_list<int>> rows) {
    BitMatrix m(rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int bit : row)
            m.set(r, c++, bit != 0);
        ++r;
    }
    return m;
}

// Naive per-entry reference multiplication, kept independent of the packed path.
BitMatrix naive_mul(const BitMatrix& a, const BitMatrix& b) {
    const std::size_t n = a.dim();
    BitMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc ^= a.get(i, k) & b.get(k, j);
            out.set(i, j, acc != 0);
        }
    return out;
}

std::size_t naive_rank(const BitMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = m.get(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t pivot = r;
        while (pivot < n && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && rows[i][c])
                for (std::size_t j = 0; j < n; ++j)
                    rows[i][j] ^= rows[r][j];
        ++r;
    }
    return r;
}

const BitMatrix kHarmonicP3 = from_bits({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
const BitMatrix kHarmonicK2 = from_bits({{1, 1}, {1, 1}});
const BitMatrix kAdjK3 = from_bits({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

} // namespace

TEST_CASE("matrix product basics") {
    const auto id = BitMatrix::identity(4);
    std::mt19937_64 rng(7);
    const auto m = BitMatrix::random(4, rng);
    CHECK(id * m == m);
    CHECK(BitMatrix(4) * m == BitMatrix(4));
    CHECK(kHarmonicP3 * kHarmonicP3 == kAdjK3);
    CHECK_THROWS_AS(m * BitMatrix::identity(5), std::invalid_argument);
}

TEST_CASE("matrix powers") {
    std::mt19937_64 rng(11);
    const auto m = BitMatrix::random(5, rng);
    CHECK(pow(m, 0) == BitMatrix::identity(5));
    CHECK(pow(kHarmonicK2, 2) == BitMatrix(2));
    CHECK(pow(kAdjK3, 2) == kAdjK3);

    const auto seq = power_sequence(m, 6);
    REQUIRE(seq.size() == 6);
    for (std::size_t t = 1; t <= 6; ++t)
        CHECK(seq[t - 1] == pow(m, t));
    for (std::uint64_t s = 0; s <= 4; ++s)
        for (std::uint64_t t = 0; t <= 4; ++t)
            CHECK(pow(m, s + t) == pow(m, s) * pow(m, t));
}

TEST_CASE("rank and kernel dimension") {
    CHECK(rank(BitMatrix::identity(6)) == 6);
    CHECK(rank(BitMatrix(6)) == 0);
    CHECK(rank(kAdjK3) == 2); // rows sum to zero
    CHECK(kernel_dim(BitMatrix(4)) == 4);
    CHECK(kernel_dim(BitMatrix::identity(4)) == 0);
    CHECK(kernel_dim(kHarmonicP3) == 1);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto m = BitMatrix::random(1 + rng() % 12, rng);
        CHECK(rank(m) + kernel_dim(m) == m.dim());
    }
}

TEST_CASE("matrix-vector product") {
    const auto e0 = BitVector::from_string("10");
    CHECK(kHarmonicK2 * e0 == BitVector::from_string("11"));
    const BitVector zero(3);
    CHECK((kHarmonicP3 * zero).is_zero());
    std::mt19937_64 rng(17);
    const auto v = BitVector::random(7, rng);
    CHECK(BitMatrix::identity(7) * v == v);
    CHECK_THROWS_AS(kHarmonicK2 * zero, std::invalid_argument);
}

TEST_CASE("packed path agrees with the naive reference") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const auto a = BitMatrix::random(n, rng);
        const auto b = BitMatrix::random(n, rng);
        REQUIRE(a * b == naive_mul(a, b));
        REQUIRE(rank(a) == naive_rank(a));
    }
}

TEST_CASE("multi-word rows behave like single-word ones") {
    std::mt19937_64 rng(37);
    for (std::size_t n : {64, 65, 100, 129}) {
        const auto a = BitMatrix::random(n, rng);
        const auto b = BitMatrix::random(n, rng);
        REQUIRE(a * b == naive_mul(a, b));
        REQUIRE(rank(a) == naive_rank(a));
        REQUIRE(rank(a) + kernel_dim(a) == n);
        REQUIRE(a * BitMatrix::identity(n) == a);

        const auto basis = kernel_basis(a);
        REQUIRE(basis.size() == kernel_dim(a));
        for (const auto& x : basis)
            REQUIRE((a * x).is_zero());

        const auto v = BitVector::random(n, rng);
        BitVector expect(n);
        for (std::size_t r = 0; r < n; ++r) {
            int acc = 0;
            for (std::size_t c = 0; c < n; ++c)
                acc ^= a.get(r, c) & v.get(c);
            expect.set(r, acc != 0);
        }
        REQUIRE(a * v == expect);
    }
}

TEST_CASE("product algebra on random matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto m = BitMatrix::random(n, rng);
        const auto p = BitMatrix::random(n, rng);
        const auto q = BitMatrix::random(n, rng);
        CHECK((m * p) * q == m * (p * q));
        CHECK(m * (p + q) == m * p + m * q);
    }
}

TEST_CASE("row and column space bases") {
    const auto basis = row_space_basis(kAdjK3);
    CHECK(basis.size() == 2);
    CHECK(rank_of_rows(basis) == 2);
    const auto cols = column_space_basis(kHarmonicP3);
    CHECK(cols.size() == 2);

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto m = BitMatrix::random(n, rng);
        CHECK(row_space_basis(m).size() == rank(m));
        CHECK(column_space_basis(m).size() == rank(m));
    }
}

TEST_CASE("kernel basis spans the null space") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto m = BitMatrix::random(n, rng);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == kernel_dim(m));
        for (const auto& x : basis)
            CHECK((m * x).is_zero());
        CHECK(rank_of_rows(basis) == basis.size());
    }
}

TEST_CASE("bit vector plumbing") {
    auto v = BitVector::from_string("0110");
    CHECK(v.length() == 4);
    CHECK(v.popcount() == 2);
    CHECK(v.to_string() == "0110");
    CHECK(v.to_mask() == 0b0110);
    CHECK(BitVector::from_mask(4, 0b0110) == v);
    v ^= v;
    CHECK(v.is_zero());
    CHECK_THROWS_AS(BitVector::from_string("012"), std::invalid_argument);
}
