#include "harmolight/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace harmolight {

namespace {

std::uint64_t tail_mask(std::size_t nbits) {
    const std::size_t rem = nbits & 63;
    return rem == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (64 - rem));
}

} // namespace

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    return v;
}

BitVector BitVector::from_mask(std::size_t length, std::uint64_t mask) {
    if (length > 64)
        throw std::invalid_argument("from_mask supports at most 64 coordinates");
    BitVector v(length);
    if (length > 0)
        v.words_[0] = mask & tail_mask(length);
    return v;
}

BitVector BitVector::random(std::size_t length, std::mt19937_64& rng) {
    BitVector v(length);
    for (auto& w : v.words_)
        w = rng();
    if (!v.words_.empty())
        v.words_.back() &= tail_mask(length);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (len_ != rhs.len_)
        throw std::invalid_argument("BitVector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    return *this;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t BitVector::to_mask() const {
    if (len_ > 64)
        throw std::invalid_argument("to_mask requires at most 64 coordinates");
    return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t dim) {
    BitMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows) {
    BitMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].length() != rows.size())
            throw std::invalid_argument("from_rows requires a square shape");
        auto src = rows[r].words();
        auto dst = m.row_words(r);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return m;
}

BitMatrix BitMatrix::random(std::size_t dim, std::mt19937_64& rng) {
    BitMatrix m(dim);
    for (auto& w : m.words_)
        w = rng();
    if (m.wpr_ > 0) {
        const std::uint64_t mask = tail_mask(dim);
        for (std::size_t r = 0; r < dim; ++r)
            m.words_[r * m.wpr_ + m.wpr_ - 1] &= mask;
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector out(dim_);
    for (std::size_t c = 0; c < dim_; ++c)
        if (get(r, c))
            out.set(c, true);
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& rhs) {
    if (dim_ != rhs.dim_)
        throw std::invalid_argument("BitMatrix dimension mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= rhs.words_[i];
    return *this;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (get(r, c))
                t.set(c, r, true);
    return t;
}

bool BitMatrix::is_symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r + 1; c < dim_; ++c)
            if (get(r, c) != get(c, r))
                return false;
    return true;
}

bool BitMatrix::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(dim_ * (dim_ + 1));
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c)
            s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs) {
    if (lhs.dim() != rhs.dim())
        throw std::invalid_argument("BitMatrix dimension mismatch");
    const std::size_t n = lhs.dim();
    BitMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        auto lrow = lhs.row_words(r);
        auto orow = out.row_words(r);
        for (std::size_t w = 0; w < lrow.size(); ++w) {
            std::uint64_t bits = lrow[w];
            while (bits != 0) {
                const std::size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                auto rrow = rhs.row_words(k);
                for (std::size_t i = 0; i < orow.size(); ++i)
                    orow[i] ^= rrow[i];
            }
        }
    }
    return out;
}

BitVector operator*(const BitMatrix& m, const BitVector& v) {
    if (m.dim() != v.length())
        throw std::invalid_argument("matrix/vector dimension mismatch");
    const std::size_t n = m.dim();
    BitVector out(n);
    auto vw = v.words();
    for (std::size_t r = 0; r < n; ++r) {
        auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < rw.size(); ++i)
            acc ^= rw[i] & vw[i];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

BitMatrix pow(const BitMatrix& m, std::uint64_t t) {
    BitMatrix result = BitMatrix::identity(m.dim());
    BitMatrix base = m;
    while (t > 0) {
        if (t & 1)
            result = result * base;
        t >>= 1;
        if (t > 0)
            base = base * base;
    }
    return result;
}

std::vector<BitMatrix> power_sequence(const BitMatrix& m, std::size_t t) {
    std::vector<BitMatrix> seq;
    seq.reserve(t);
    if (t == 0)
        return seq;
    seq.push_back(m);
    for (std::size_t i = 1; i < t; ++i)
        seq.push_back(seq.back() * m);
    return seq;
}

namespace {

// Forward elimination on a list of packed rows; returns rank.
std::size_t eliminate(std::vector<std::vector<std::uint64_t>>& rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t pivot = r;
        while (pivot < rows.size() && (rows[pivot][w] & bit) == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if (rows[i][w] & bit)
                for (std::size_t j = w; j < rows[i].size(); ++j)
                    rows[i][j] ^= rows[r][j];
        ++r;
    }
    return r;
}

std::vector<std::vector<std::uint64_t>> packed_rows(const BitMatrix& m) {
    std::vector<std::vector<std::uint64_t>> rows(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        auto src = m.row_words(r);
        rows[r].assign(src.begin(), src.end());
    }
    return rows;
}

BitVector unpack_row(const std::vector<std::uint64_t>& words, std::size_t len) {
    BitVector v(len);
    for (std::size_t c = 0; c < len; ++c)
        if ((words[c >> 6] >> (c & 63)) & 1u)
            v.set(c, true);
    return v;
}

} // namespace

std::size_t rank(const BitMatrix& m) {
    auto rows = packed_rows(m);
    return eliminate(rows, m.dim());
}

std::size_t kernel_dim(const BitMatrix& m) { return m.dim() - rank(m); }

std::size_t rank_of_rows(const std::vector<BitVector>& rows) {
    if (rows.empty())
        return 0;
    const std::size_t len = rows[0].length();
    std::vector<std::vector<std::uint64_t>> packed(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].length() != len)
            throw std::invalid_argument("rank_of_rows requires equal-length vectors");
        auto w = rows[i].words();
        packed[i].assign(w.begin(), w.end());
    }
    return eliminate(packed, len);
}

std::vector<BitVector> row_space_basis(const BitMatrix& m) {
    auto rows = packed_rows(m);
    const std::size_t r = eliminate(rows, m.dim());
    std::vector<BitVector> basis;
    basis.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        basis.push_back(unpack_row(rows[i], m.dim()));
    return basis;
}

std::vector<BitVector> column_space_basis(const BitMatrix& m) {
    return row_space_basis(m.transposed());
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const std::size_t n = m.dim();
    // Eliminate [m^T | I] rows: combinations producing a zero row of m^T are
    // exactly the x with m x = 0.
    std::vector<std::vector<std::uint64_t>> rows(n);
    const std::size_t wpr = (n + 63) / 64;
    const BitMatrix t = m.transposed();
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].assign(2 * wpr, 0);
        auto src = t.row_words(i);
        std::copy(src.begin(), src.end(), rows[i].begin());
        rows[i][wpr + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    // Eliminate on the left block only; right block records the combination.
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t pivot = r;
        while (pivot < n && (rows[pivot][w] & bit) == 0)
            ++pivot;
        if (pivot == n)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < n; ++i)
            if (rows[i][w] & bit)
                for (std::size_t j = 0; j < 2 * wpr; ++j)
                    rows[i][j] ^= rows[r][j];
        ++r;
    }
    std::vector<BitVector> basis;
    for (std::size_t i = r; i < n; ++i) {
        BitVector x(n);
        for (std::size_t c = 0; c < n; ++c)
            if ((rows[i][wpr + (c >> 6)] >> (c & 63)) & 1u)
                x.set(c, true);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace harmolight
