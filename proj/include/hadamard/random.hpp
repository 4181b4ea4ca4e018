#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace hadamard {

/// Seeded generator used for pool variants and sampled enumeration.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded draws and shuffles are done here rather than through
/// std::uniform_int_distribution / std::shuffle, whose algorithms are left to
/// the library vendor, so a given seed reproduces the same stream on every
/// conforming toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Drop the 2^64 mod bound lowest outputs so every residue is equally likely.
        const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
        std::uint64_t x = engine_();
        while (x < threshold) x = engine_();
        return x % bound;
    }

    bool coin() { return (engine_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hadamard
