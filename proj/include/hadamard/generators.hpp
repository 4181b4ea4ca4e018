#pragma once

// Base-family generators: Sylvester powers and Paley type I.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace hadamard {

inline constexpr unsigned default_max_sylvester_power = 12;

/// Sylvester matrix of order 2^t, normalized.
inline HadamardMatrix sylvester_power(unsigned t, unsigned max_t = default_max_sylvester_power) {
    if (t > max_t) {
        throw ResourceLimit("sylvester_power: t = " + std::to_string(t) + " exceeds the limit " + std::to_string(max_t));
    }
    const auto h1 = HadamardMatrix::trusted(BinaryMatrix::from_strings({"0"}));
    const auto h2 = HadamardMatrix::trusted(BinaryMatrix::from_strings({"00", "01"}));
    HadamardMatrix h = h1;
    for (unsigned i = 0; i < t; ++i) h = sylvester_product(h, h2);
    return h;
}

constexpr bool is_prime(std::uint64_t q) noexcept {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

constexpr bool is_paley1_prime(std::uint64_t q) noexcept { return q % 4 == 3 && is_prime(q); }

/// Paley type I matrix of order q + 1 for a prime q = 3 (mod 4), normalized.
///
/// Before normalization the core entry (i, j), i != j, is 1 exactly when
/// j - i is a quadratic non-residue mod q; the diagonal is 0, the top border
/// row is 0 and the left border column is 1 below the corner.
inline HadamardMatrix paley_I(std::uint64_t q) {
    if (!is_paley1_prime(q)) {
        throw InvalidParameter("paley_I: q = " + std::to_string(q) + " must be a prime congruent to 3 mod 4");
    }
    if (q > 8191) throw ResourceLimit("paley_I: q = " + std::to_string(q) + " exceeds the limit 8191");
    std::vector<bool> residue(q, false);
    for (std::uint64_t x = 1; x < q; ++x) residue[(x * x) % q] = true;

    const std::size_t n = q + 1;
    BinaryMatrix m(n, n);
    for (std::size_t r = 1; r < n; ++r) {
        m.set(r, 0);
        for (std::size_t c = 1; c < n; ++c) {
            if (r == c) continue;
            const std::uint64_t diff = (c + q - r) % q;
            m.set(r, c, !residue[diff]);
        }
    }
    return normalize(HadamardMatrix(std::move(m)));
}

}  // namespace hadamard
