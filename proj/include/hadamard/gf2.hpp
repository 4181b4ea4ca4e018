#pragma once

// Bit-packed vectors and matrices over GF(2).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hadamard {

class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;

    /// All-zero vector of the given length.
    explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                v.set(i);
            } else if (s[i] != '0') {
                throw std::invalid_argument("BitVector: illegal character '" + std::string(1, s[i]) + "'");
            }
        }
        return v;
    }

    static BitVector ones(std::size_t len) {
        BitVector v(len);
        std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
        v.clear_tail();
        return v;
    }

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    bool get(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    bool operator[](std::size_t i) const noexcept { return get(i); }

    void set(std::size_t i, bool v = true) noexcept {
        const word_type mask = word_type{1} << (i % word_bits);
        if (v) {
            words_[i / word_bits] |= mask;
        } else {
            words_[i / word_bits] &= ~mask;
        }
    }

    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

    /// Complements every coordinate in place.
    void flip() noexcept {
        for (auto& w : words_) w = ~w;
        clear_tail();
    }

    std::size_t weight() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    /// Index of the lowest set bit, or size() when the vector is zero.
    std::size_t first_set() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
        return len_;
    }

    BitVector& operator^=(const BitVector& other) {
        require_same_length(other, "xor");
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return *this;
    }

    /// Copies `src` into coordinates [offset, offset + src.size()), complemented when `complement` is set.
    void assign_segment(std::size_t offset, const BitVector& src, bool complement = false) {
        if (offset + src.size() > len_) throw DimensionError("BitVector: segment exceeds vector length");
        for (std::size_t i = 0; i < src.size(); ++i) set(offset + i, src.get(i) != complement);
    }

    std::string to_string(char zero = '0', char one = '1') const {
        std::string s(len_, zero);
        for (std::size_t i = 0; i < len_; ++i) {
            if (get(i)) s[i] = one;
        }
        return s;
    }

    std::span<const word_type> words() const noexcept { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Lexicographic by coordinate index, shorter vectors first.
    friend bool operator<(const BitVector& a, const BitVector& b) noexcept {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        for (std::size_t i = 0; i < a.len_; ++i) {
            if (a.get(i) != b.get(i)) return b.get(i);
        }
        return false;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

private:
    static std::size_t word_count(std::size_t len) noexcept { return (len + word_bits - 1) / word_bits; }

    void clear_tail() noexcept {
        if (len_ % word_bits != 0) words_.back() &= (word_type{1} << (len_ % word_bits)) - 1;
    }

    void require_same_length(const BitVector& other, const char* op) const {
        if (len_ != other.len_) {
            throw DimensionError(std::string("BitVector ") + op + ": length mismatch (" + std::to_string(len_) +
                                 " vs " + std::to_string(other.len_) + ")");
        }
    }

    std::size_t len_ = 0;
    std::vector<word_type> words_;
};

inline std::size_t hamming_distance(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size()) {
        throw DimensionError("hamming_distance: length mismatch (" + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()) + ")");
    }
    std::size_t d = 0;
    auto xw = x.words();
    auto yw = y.words();
    for (std::size_t k = 0; k < xw.size(); ++k) d += static_cast<std::size_t>(std::popcount(xw[k] ^ yw[k]));
    return d;
}

inline BitVector xor_of(const BitVector& x, const BitVector& y) { return x ^ y; }

/// x + e(1,...,1): identity for e = 0, complement for e = 1.
inline BitVector add_constant(BitVector x, bool e) {
    if (e) x.flip();
    return x;
}

inline BitVector complement(BitVector x) {
    x.flip();
    return x;
}

/// Dimension of the GF(2) span of `vectors`. Empty input has rank 0.
inline std::size_t gf2_rank(std::span<const BitVector> vectors) {
    if (vectors.empty()) return 0;
    const std::size_t len = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != len) throw DimensionError("gf2_rank: vectors of mixed length");
    }

    // Echelon basis keyed by pivot column; each new vector is reduced against it.
    std::vector<BitVector> basis;
    std::vector<std::size_t> pivots;
    for (const auto& v : vectors) {
        BitVector r = v;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (r.get(pivots[b])) r ^= basis[b];
        }
        const std::size_t p = r.first_set();
        if (p == len) continue;
        // Keep the basis reduced so later pivots stay cleared in earlier rows.
        for (auto& row : basis) {
            if (row.get(p)) row ^= r;
        }
        basis.push_back(std::move(r));
        pivots.push_back(p);
    }
    return basis.size();
}

/// Rectangular matrix stored as equal-length BitVector rows.
class BinaryMatrix {
public:
    BinaryMatrix() = default;

    BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

    explicit BinaryMatrix(std::vector<BitVector> rows) : data_(std::move(rows)) {
        cols_ = data_.empty() ? 0 : data_.front().size();
        for (const auto& r : data_) {
            if (r.size() != cols_) throw DimensionError("BinaryMatrix: rows of unequal length");
        }
    }

    static BinaryMatrix from_strings(std::initializer_list<std::string_view> rows) {
        std::vector<BitVector> v;
        v.reserve(rows.size());
        for (auto r : rows) v.push_back(BitVector::from_string(r));
        return BinaryMatrix(std::move(v));
    }

    std::size_t rows() const noexcept { return data_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows() == cols_; }

    bool get(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) noexcept { data_[r].set(c, v); }

    const BitVector& row(std::size_t r) const noexcept { return data_[r]; }
    BitVector& row(std::size_t r) noexcept { return data_[r]; }
    const std::vector<BitVector>& row_vectors() const noexcept { return data_; }

    void flip_row(std::size_t r) noexcept { data_[r].flip(); }
    void flip_column(std::size_t c) noexcept {
        for (auto& r : data_) r.flip(c);
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

}  // namespace hadamard

template <>
struct std::hash<hadamard::BitVector> {
    std::size_t operator()(const hadamard::BitVector& v) const noexcept {
        // splitmix64 finalizer folded over the packed words
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
        for (auto w : v.words()) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
            h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
            h ^= h >> 31;
        }
        return static_cast<std::size_t>(h);
    }
};
