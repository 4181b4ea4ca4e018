#pragma once

// Sylvester-type block constructions of Hadamard matrices.
//
// All three work in {0,1} form, where "h + M" means M with every entry
// complemented when h = 1. Outputs are laid out block-row-major: global row
// (i * inner) + r, global column (j * inner) + c.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "matrix.hpp"

namespace hadamard {

/// Replaces every entry h_{i,j} of `outer` with the block h_{i,j} + `inner`.
inline HadamardMatrix sylvester_product(const HadamardMatrix& outer, const HadamardMatrix& inner) {
    const std::size_t n = outer.order();
    const std::size_t m = inner.order();
    std::vector<BitVector> rows;
    rows.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            BitVector row(n * m);
            for (std::size_t j = 0; j < n; ++j) row.assign_segment(j * m, inner.row(r), outer.get(i, j));
            rows.push_back(std::move(row));
        }
    }
    return HadamardMatrix::trusted(BinaryMatrix(std::move(rows)));
}

/// Generalized Sylvester construction of No and Song: block (i, j) is
/// c_{i,j} + blocks[j], so each block column may use its own order-k matrix.
inline HadamardMatrix no_song(const HadamardMatrix& c, const std::vector<HadamardMatrix>& blocks) {
    const std::size_t m = c.order();
    if (blocks.size() != m) {
        throw InvalidInput("generalized Sylvester construction requires m = " + std::to_string(m) +
                           " matrices B_j (one per column of C), got " + std::to_string(blocks.size()));
    }
    const std::size_t k = blocks.front().order();
    for (const auto& b : blocks) {
        if (b.order() != k) {
            throw InvalidInput("generalized Sylvester construction requires all B_j of the same order k (found " +
                               std::to_string(k) + " and " + std::to_string(b.order()) + ")");
        }
    }
    std::vector<BitVector> rows;
    rows.reserve(m * k);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < k; ++r) {
            BitVector row(m * k);
            for (std::size_t j = 0; j < m; ++j) row.assign_segment(j * k, blocks[j].row(r), c.get(i, j));
            rows.push_back(std::move(row));
        }
    }
    return HadamardMatrix::trusted(BinaryMatrix(std::move(rows)));
}

/// Inputs of the two-pool construction: m matrices A_j of order k and
/// k matrices B_u of order m.
class ModifiedInputs {
public:
    ModifiedInputs(std::vector<HadamardMatrix> a, std::vector<HadamardMatrix> b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.empty() || b_.empty()) throw InvalidInput("two-pool construction requires non-empty A and B lists");
        const std::size_t k = a_.front().order();
        const std::size_t m = b_.front().order();
        for (const auto& x : a_) {
            if (x.order() != k) {
                throw InvalidInput("two-pool construction requires all A_j of the same order k (found " +
                                   std::to_string(k) + " and " + std::to_string(x.order()) + ")");
            }
        }
        for (const auto& x : b_) {
            if (x.order() != m) {
                throw InvalidInput("two-pool construction requires all B_u of the same order m (found " +
                                   std::to_string(m) + " and " + std::to_string(x.order()) + ")");
            }
        }
        if (a_.size() != m) {
            throw InvalidInput("two-pool construction requires m = " + std::to_string(m) + " matrices A_j of order k, got " +
                               std::to_string(a_.size()));
        }
        if (b_.size() != k) {
            throw InvalidInput("two-pool construction requires k = " + std::to_string(k) + " matrices B_u of order m, got " +
                               std::to_string(b_.size()));
        }
    }

    std::size_t k() const noexcept { return a_.front().order(); }
    std::size_t m() const noexcept { return b_.front().order(); }
    const std::vector<HadamardMatrix>& a() const noexcept { return a_; }
    const std::vector<HadamardMatrix>& b() const noexcept { return b_; }

private:
    std::vector<HadamardMatrix> a_;
    std::vector<HadamardMatrix> b_;
};

/// Two-pool modification of the generalized Sylvester construction.
///
/// Row (shell i, inner s), i in [0, m), s in [0, k), sits at global row
/// i * k + s and is the concatenation over j of a^{(j)}_s + b^{(s)}_{i,j},
/// segment j occupying columns [j * k, (j + 1) * k).
inline HadamardMatrix modified(const ModifiedInputs& in) {
    const std::size_t k = in.k();
    const std::size_t m = in.m();
    std::vector<BitVector> rows;
    rows.reserve(m * k);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t s = 0; s < k; ++s) {
            const HadamardMatrix& shift = in.b()[s];
            BitVector row(m * k);
            for (std::size_t j = 0; j < m; ++j) row.assign_segment(j * k, in.a()[j].row(s), shift.get(i, j));
            rows.push_back(std::move(row));
        }
    }
    return HadamardMatrix::trusted(BinaryMatrix(std::move(rows)));
}

}  // namespace hadamard
