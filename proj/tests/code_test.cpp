#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "hadamard/code.hpp"
#include "hadamard/constructions.hpp"
#include "hadamard/generators.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

std::set<std::string> as_strings(const std::vector<BitVector>& v) {
    std::set<std::string> out;
    for (const auto& w : v) out.insert(w.to_string());
    return out;
}

std::vector<HadamardMatrix> sample_matrices() {
    Rng rng(40);
    std::vector<HadamardMatrix> out;
    for (unsigned t = 1; t <= 5; ++t) out.push_back(sylvester_power(t));
    for (std::uint64_t q : {3, 7, 11, 19, 23}) out.push_back(paley_I(q));
    const auto s4 = sylvester_power(2);
    const auto p4 = paley_I(3);
    const auto s8 = sylvester_power(3);
    const auto p8 = paley_I(7);
    out.push_back(modified(ModifiedInputs({s4, p4, s4, p4}, {s4, p4, p4, s4})));
    out.push_back(modified(ModifiedInputs({s8, p8}, std::vector<HadamardMatrix>(8, sylvester_power(1)))));
    out.push_back(no_song(paley_I(11), std::vector<HadamardMatrix>(12, sylvester_power(1))));
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(apply_transform(out[i], EquivalenceTransform::random(out[i].order(), rng)));
    }
    return out;
}

}  // namespace

TEST(CodeFromMatrix, Examples) {
    EXPECT_EQ(as_strings(code_from_matrix(sylvester_power(1)).words()), (std::set<std::string>{"00", "01", "10", "11"}));
    EXPECT_EQ(as_strings(code_from_matrix(sylvester_power(2)).words()),
              (std::set<std::string>{"0000", "0101", "0011", "0110", "1111", "1010", "1100", "1001"}));
    EXPECT_THROW(code_from_matrix(sylvester_power(0)), InvalidInput);
}

TEST(CodeFromMatrix, ParametersMatchOracle) {
    for (const auto& h : sample_matrices()) {
        const auto c = code_from_matrix(h);
        const auto ref = oracle::hadamard_code(h.matrix());
        EXPECT_EQ(as_strings(c.words()), ref);
        EXPECT_EQ(c.size(), 2 * h.order());
        EXPECT_TRUE(c.contains(BitVector(h.order())));
        for (const auto& w : c.words()) EXPECT_TRUE(c.contains(complement(w)));
        EXPECT_EQ(min_distance(c), h.order() / 2);
        EXPECT_EQ(oracle::min_distance(ref), h.order() / 2);
    }
}

TEST(MinDistance, Examples) {
    EXPECT_EQ(min_distance(code_from_matrix(sylvester_power(2))), 2u);
    EXPECT_EQ(min_distance(code_from_matrix(sylvester_power(1))), 1u);
    const auto s4 = sylvester_power(2);
    const auto p4 = paley_I(3);
    EXPECT_EQ(min_distance(code_from_matrix(modified(ModifiedInputs({s4, p4, p4, s4}, {p4, s4, s4, p4})))), 8u);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(code_from_matrix(sylvester_power(2))), 3u);
    for (unsigned t = 1; t <= 6; ++t) {
        const auto c = code_from_matrix(sylvester_power(t));
        EXPECT_EQ(rank(c), t + 1);
        if (t <= 4) {
            const auto strs = as_strings(c.words());
            std::vector<oracle::Word> ws(strs.begin(), strs.end());
            EXPECT_EQ(oracle::span_rank(ws), t + 1);
        }
    }
    const auto p12 = rank(code_from_matrix(paley_I(11)));
    EXPECT_GE(p12, 5u);
}

TEST(Kernel, Examples) {
    const auto c4 = code_from_matrix(sylvester_power(2));
    EXPECT_EQ(kernel(c4).size(), 8u);
    for (const auto& h : sample_matrices()) {
        const auto c = code_from_matrix(h);
        const auto ker = as_strings(kernel(c));
        EXPECT_TRUE(ker.contains(std::string(h.order(), '0')));
        EXPECT_TRUE(ker.contains(std::string(h.order(), '1')));
    }
}

TEST(Kernel, MatchesDefinitionalOracle) {
    for (const auto& h : sample_matrices()) {
        const auto c = code_from_matrix(h);
        EXPECT_EQ(as_strings(kernel(c)), oracle::kernel(oracle::hadamard_code(h.matrix())));
    }
}

TEST(Kernel, CandidateRestrictionLosesNothing) {
    // Over every vector of length n, only code members stabilize the code.
    for (const auto& h : {sylvester_power(2), paley_I(3), paley_I(7), sylvester_power(3), paley_I(11)}) {
        const auto ref = oracle::hadamard_code(h.matrix());
        EXPECT_EQ(as_strings(kernel(code_from_matrix(h))), oracle::kernel_all_vectors(ref, h.order()));
    }
}

TEST(Kernel, RequiresZeroWord) {
    const HadamardCode c({BitVector::from_string("01"), BitVector::from_string("10")});
    EXPECT_THROW(kernel(c), InvalidInput);
    EXPECT_THROW(dim_kernel(c), InvalidInput);
}

TEST(Kernel, IsSubspaceAndPartitionsCode) {
    for (const auto& h : sample_matrices()) {
        const auto c = code_from_matrix(h);
        const auto ker = kernel(c);
        const std::set<BitVector> ks(ker.begin(), ker.end());
        for (const auto& x : ker) {
            for (const auto& y : ker) ASSERT_TRUE(ks.contains(x ^ y));
        }
        // Cosets x + ker(C) for x in C are disjoint and cover C.
        std::set<BitVector> covered;
        std::size_t cosets = 0;
        for (const auto& x : c.words()) {
            if (covered.contains(x)) continue;
            ++cosets;
            for (const auto& k : ker) {
                ASSERT_TRUE(c.contains(x ^ k));
                ASSERT_TRUE(covered.insert(x ^ k).second);
            }
        }
        EXPECT_EQ(covered.size(), c.size());
        EXPECT_EQ(cosets * ker.size(), c.size());
    }
}

TEST(DimKernel, Examples) {
    EXPECT_EQ(dim_kernel(code_from_matrix(sylvester_power(2))), 3u);
    for (unsigned t = 1; t <= 6; ++t) EXPECT_EQ(dim_kernel(code_from_matrix(sylvester_power(t))), t + 1);
    for (const auto& h : sample_matrices()) EXPECT_GE(dim_kernel(code_from_matrix(h)), 1u);
}

TEST(Signature, Examples) {
    EXPECT_EQ(signature(sylvester_power(4)), (InvariantSignature{16, 5, 5, 8}));
    EXPECT_EQ(signature(sylvester_power(2)), (InvariantSignature{4, 3, 3, 2}));
    // Frozen from an independent span-enumeration / translate-compare script.
    EXPECT_EQ(signature(paley_I(11)), (InvariantSignature{12, 11, 1, 6}));
    EXPECT_EQ(signature(paley_I(19)), (InvariantSignature{20, 19, 1, 10}));
    EXPECT_EQ(signature(paley_I(7)), (InvariantSignature{8, 4, 4, 4}));
    const auto s8 = sylvester_power(3);
    const auto p8 = paley_I(7);
    EXPECT_EQ(signature(modified(ModifiedInputs({s8, p8, p8, s8, s8, p8, s8, p8}, {s8, p8, s8, p8, p8, p8, s8, s8}))),
              (InvariantSignature{64, 12, 2, 32}));
    EXPECT_EQ(signature(modified(ModifiedInputs(std::vector<HadamardMatrix>(12, sylvester_power(2)),
                                                std::vector<HadamardMatrix>(4, paley_I(11))))),
              (InvariantSignature{48, 13, 3, 24}));
    EXPECT_EQ(signature(modified(ModifiedInputs({s8, p8}, std::vector<HadamardMatrix>(8, sylvester_power(1))))),
              (InvariantSignature{16, 8, 2, 8}));
}

TEST(Signature, InvariantUnderEquivalence) {
    Rng rng(9);
    for (const auto& h : sample_matrices()) {
        const auto base = signature(h);
        for (int i = 0; i < 10; ++i) {
            EXPECT_EQ(signature(apply_transform(h, EquivalenceTransform::random(h.order(), rng))), base);
        }
    }
}

TEST(Signature, StructuralBounds) {
    for (const auto& h : sample_matrices()) {
        const auto s = signature(h);
        const std::size_t n = h.order();
        EXPECT_GE(std::size_t{1} << s.rank, 2 * n);
        EXPECT_LE(s.dim_kernel, s.rank);
        EXPECT_EQ((2 * n) % (std::size_t{1} << s.dim_kernel), 0u);
        // Linear exactly when the kernel is the whole code.
        EXPECT_EQ(s.dim_kernel == s.rank, (std::size_t{1} << s.rank) == 2 * n);
    }
}
