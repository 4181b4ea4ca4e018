#pragma once

// Hadamard matrices in {0,1} form, their verification, normalization and
// equivalence transforms.

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "random.hpp"

namespace hadamard {

/// Orders for which a Hadamard matrix can exist: 1, 2 and multiples of 4.
constexpr bool is_admissible_order(std::size_t n) noexcept { return n == 1 || n == 2 || (n != 0 && n % 4 == 0); }

/// A pair of rows whose distance is not order/2.
struct RowWitness {
    std::size_t first;
    std::size_t second;
    std::size_t distance;
};

/// Why a candidate failed the Hadamard test. `rows` is empty when the
/// matrix has no row pairs to blame (non-square or order 0).
struct HadamardViolation {
    std::string reason;
    std::optional<RowWitness> rows;
};

/// First reason `m` is not Hadamard, or nullopt if it is.
inline std::optional<HadamardViolation> find_violation(const BinaryMatrix& m) {
    const std::size_t n = m.rows();
    if (!m.is_square()) {
        return HadamardViolation{"matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                     ", not square",
                                 std::nullopt};
    }
    std::optional<RowWitness> first_bad;
    for (std::size_t i = 0; i < n && !first_bad; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t d = hamming_distance(m.row(i), m.row(j));
            if (2 * d != n) {
                first_bad = RowWitness{i, j, d};
                break;
            }
        }
    }
    if (!is_admissible_order(n)) {
        return HadamardViolation{"order " + std::to_string(n) + " is not 1, 2 or a multiple of 4", first_bad};
    }
    if (first_bad) return HadamardViolation{"rows at distance other than n/2", first_bad};
    return std::nullopt;
}

inline bool is_hadamard(const BinaryMatrix& m) {
    const std::size_t n = m.rows();
    if (!m.is_square() || !is_admissible_order(n)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (2 * hamming_distance(m.row(i), m.row(j)) != n) return false;
        }
    }
    return true;
}

/// A BinaryMatrix certified to satisfy is_hadamard.
class HadamardMatrix {
public:
    /// Certifies `m`; throws InvalidInput if it is not Hadamard.
    explicit HadamardMatrix(BinaryMatrix m) : mat_(std::move(m)) {
        if (auto v = find_violation(mat_)) throw InvalidInput("not a Hadamard matrix: " + v->reason);
    }

    /// Wraps a matrix whose Hadamard property is guaranteed by construction.
    static HadamardMatrix trusted(BinaryMatrix m) { return HadamardMatrix(std::move(m), Trusted{}); }

    std::size_t order() const noexcept { return mat_.rows(); }
    const BinaryMatrix& matrix() const noexcept { return mat_; }
    const BitVector& row(std::size_t i) const noexcept { return mat_.row(i); }
    bool get(std::size_t r, std::size_t c) const noexcept { return mat_.get(r, c); }

    friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

private:
    struct Trusted {};
    HadamardMatrix(BinaryMatrix m, Trusted) : mat_(std::move(m)) {}

    BinaryMatrix mat_;
};

/// Complements columns where the first row is 1, then rows where the first
/// column is 1. The result has an all-zero first row and column.
inline HadamardMatrix normalize(const HadamardMatrix& h) {
    BinaryMatrix m = h.matrix();
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        if (m.get(0, c)) m.flip_column(c);
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (m.get(r, 0)) m.flip_row(r);
    }
    return HadamardMatrix::trusted(std::move(m));
}

inline bool is_normalized(const HadamardMatrix& h) {
    for (std::size_t i = 0; i < h.order(); ++i) {
        if (h.get(0, i) || h.get(i, 0)) return false;
    }
    return true;
}

/// Row/column permutation plus row/column complementation.
///
/// Applied as out[i][j] = in[row_perm[i]][col_perm[j]] + row_flips[i] + col_flips[j];
/// permutations are 0-based.
struct EquivalenceTransform {
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    BitVector row_flips;
    BitVector col_flips;

    std::size_t size() const noexcept { return row_perm.size(); }

    static EquivalenceTransform identity(std::size_t n) {
        EquivalenceTransform t{std::vector<std::size_t>(n), std::vector<std::size_t>(n), BitVector(n), BitVector(n)};
        std::iota(t.row_perm.begin(), t.row_perm.end(), std::size_t{0});
        std::iota(t.col_perm.begin(), t.col_perm.end(), std::size_t{0});
        return t;
    }

    /// Uniform permutations and independent fair-coin flips.
    static EquivalenceTransform random(std::size_t n, Rng& rng) {
        auto t = identity(n);
        rng.shuffle(std::span<std::size_t>(t.row_perm));
        rng.shuffle(std::span<std::size_t>(t.col_perm));
        for (std::size_t i = 0; i < n; ++i) t.row_flips.set(i, rng.coin());
        for (std::size_t i = 0; i < n; ++i) t.col_flips.set(i, rng.coin());
        return t;
    }
};

namespace detail {

inline bool is_permutation_of_iota(const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

}  // namespace detail

inline HadamardMatrix apply_transform(const HadamardMatrix& h, const EquivalenceTransform& t) {
    const std::size_t n = h.order();
    if (t.row_perm.size() != n || t.col_perm.size() != n || t.row_flips.size() != n || t.col_flips.size() != n) {
        throw DimensionError("apply_transform: transform size does not match order " + std::to_string(n));
    }
    if (!detail::is_permutation_of_iota(t.row_perm) || !detail::is_permutation_of_iota(t.col_perm)) {
        throw InvalidInput("apply_transform: row_perm and col_perm must be permutations of 0..n-1");
    }
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BitVector& src = h.row(t.row_perm[i]);
        BitVector r(n);
        for (std::size_t j = 0; j < n; ++j) r.set(j, src.get(t.col_perm[j]) != t.col_flips.get(j));
        if (t.row_flips.get(i)) r.flip();
        rows.push_back(std::move(r));
    }
    return HadamardMatrix::trusted(BinaryMatrix(std::move(rows)));
}

}  // namespace hadamard
