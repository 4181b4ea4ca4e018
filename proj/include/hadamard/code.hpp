#pragma once

// Binary Hadamard codes and their rank / kernel invariants.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <ostream>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "matrix.hpp"

namespace hadamard {

/// Rows of a normalized Hadamard matrix together with their complements.
/// Words are kept sorted; membership goes through a hash set.
class HadamardCode {
public:
    /// Wraps an arbitrary set of equal-length words (duplicates removed).
    explicit HadamardCode(std::vector<BitVector> words) : words_(std::move(words)) {
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
        length_ = words_.empty() ? 0 : words_.front().size();
        for (const auto& w : words_) {
            if (w.size() != length_) throw DimensionError("HadamardCode: words of mixed length");
        }
        index_.insert(words_.begin(), words_.end());
    }

    std::size_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<BitVector>& words() const noexcept { return words_; }
    bool contains(const BitVector& w) const { return index_.contains(w); }

private:
    std::size_t length_ = 0;
    std::vector<BitVector> words_;
    std::unordered_set<BitVector> index_;
};

inline HadamardCode code_from_matrix(const HadamardMatrix& h) {
    if (h.order() < 2) throw InvalidInput("code_from_matrix: Hadamard codes need order at least 2");
    const HadamardMatrix n = normalize(h);
    std::vector<BitVector> words;
    words.reserve(2 * n.order());
    for (const auto& r : n.matrix().row_vectors()) {
        words.push_back(r);
        words.push_back(complement(r));
    }
    return HadamardCode(std::move(words));
}

/// Minimum distance over distinct pairs. Codes with fewer than two words yield 0.
inline std::size_t min_distance(const HadamardCode& c) {
    const auto& w = c.words();
    if (w.size() < 2) return 0;
    std::size_t best = c.length() + 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, hamming_distance(w[i], w[j]));
    }
    return best;
}

inline std::size_t rank(const HadamardCode& c) { return gf2_rank(c.words()); }

/// { x : x + C = C }, evaluated word by word against the code's hash set.
/// Candidates are drawn from C itself, which loses nothing because 0 is in C.
inline std::vector<BitVector> kernel(const HadamardCode& c) {
    if (c.size() == 0 || !c.contains(BitVector(c.length()))) {
        throw InvalidInput("kernel: the code must contain the all-zero word");
    }
    std::vector<BitVector> ker;
    for (const auto& x : c.words()) {
        const bool stabilizes =
            std::all_of(c.words().begin(), c.words().end(), [&](const BitVector& y) { return c.contains(x ^ y); });
        if (stabilizes) ker.push_back(x);
    }
    return ker;
}

inline std::size_t dim_kernel(const HadamardCode& c) {
    const std::size_t size = kernel(c).size();
    // The kernel is a linear subspace, so its size is a power of two.
    return static_cast<std::size_t>(std::countr_zero(size));
}

struct InvariantSignature {
    std::size_t order = 0;
    std::size_t rank = 0;
    std::size_t dim_kernel = 0;
    std::size_t min_distance = 0;

    /// Ascending by (rank, dim_kernel), then order and min_distance.
    friend auto operator<=>(const InvariantSignature& a, const InvariantSignature& b) {
        return std::tie(a.rank, a.dim_kernel, a.order, a.min_distance) <=>
               std::tie(b.rank, b.dim_kernel, b.order, b.min_distance);
    }
    friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;

    friend std::ostream& operator<<(std::ostream& os, const InvariantSignature& s) {
        return os << "order=" << s.order << " rank=" << s.rank << " kernel=" << s.dim_kernel
                  << " mindist=" << s.min_distance;
    }
};

inline InvariantSignature signature(const HadamardMatrix& h) {
    const HadamardCode c = code_from_matrix(h);
    return {h.order(), rank(c), dim_kernel(c), min_distance(c)};
}

}  // namespace hadamard
