#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hadamard/explorer.hpp"

using namespace hadamard;

namespace {

PoolSpec spec(std::size_t order, std::set<Family> families, std::size_t variants = 0, std::uint64_t seed = 0) {
    PoolSpec s;
    s.order = order;
    s.families = std::move(families);
    s.variants_per_base = variants;
    s.seed = seed;
    return s;
}

std::string json_of(const ExplorationReport& r) {
    std::ostringstream os;
    write_report_json(os, r);
    return os.str();
}

}  // namespace

TEST(BuildPool, Examples) {
    const auto single = build_pool(spec(4, {Family::sylvester}));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single.front(), sylvester_power(2));

    const auto three = build_pool(spec(4, {Family::sylvester}, 2, 7));
    ASSERT_EQ(three.size(), 3u);
    for (const auto& h : three) {
        EXPECT_EQ(h.order(), 4u);
        EXPECT_TRUE(is_hadamard(h.matrix()));
    }

    EXPECT_THROW(build_pool(spec(6, {Family::sylvester})), InvalidParameter);
}

TEST(BuildPool, FamilySelection) {
    EXPECT_THROW(build_pool(spec(12, {Family::sylvester})), InvalidParameter);
    EXPECT_EQ(build_pool(spec(12, {Family::sylvester, Family::paley1})).size(), 1u);
    EXPECT_EQ(build_pool(spec(8, {Family::sylvester, Family::paley1}, 3)).size(), 8u);
    EXPECT_THROW(build_pool(spec(16, {Family::paley1})), InvalidParameter);
}

TEST(BuildPool, DeterministicGivenSeed) {
    EXPECT_EQ(build_pool(spec(8, {Family::sylvester, Family::paley1}, 4, 99)),
              build_pool(spec(8, {Family::sylvester, Family::paley1}, 4, 99)));
    EXPECT_NE(build_pool(spec(8, {Family::sylvester}, 4, 1)), build_pool(spec(8, {Family::sylvester}, 4, 2)));
}

TEST(BuildPool, FileFamily) {
    const auto dir = std::filesystem::temp_directory_path() / "hadamard_explorer_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "p12.txt") << write_matrix(paley_I(11).matrix());
        std::ofstream(dir / "s8.txt") << write_matrix(sylvester_power(3).matrix());
        std::ofstream(dir / "bad.txt") << "4\n0000\n0000\n0000\n0000\n";
    }
    auto s = spec(12, {Family::file});
    s.files = {dir / "p12.txt"};
    const auto pool = build_pool(s);
    ASSERT_EQ(pool.size(), 1u);
    EXPECT_EQ(pool.front(), paley_I(11));

    s.files = {dir / "s8.txt"};
    EXPECT_THROW(build_pool(s), InvalidParameter);
    s.order = 4;
    s.files = {dir / "bad.txt"};
    EXPECT_THROW(build_pool(s), InvalidInput);
    s.files = {dir / "missing.txt"};
    EXPECT_THROW(build_pool(s), InvalidParameter);
}

TEST(EnumerateAssignments, Examples) {
    const Pool one{sylvester_power(1)};
    EXPECT_EQ(enumerate_assignments(one, one, Strategy::exhaustive()).size(), 1u);

    const Pool two{sylvester_power(1), apply_transform(sylvester_power(1), EquivalenceTransform::identity(2))};
    const auto set = enumerate_assignments(two, one, Strategy::exhaustive());
    ASSERT_EQ(set.size(), 4u);
    std::vector<Assignment> seen(set.begin(), set.end());
    EXPECT_EQ(seen[0], (Assignment{{0, 0}, {0, 0}}));
    EXPECT_EQ(seen[1], (Assignment{{0, 1}, {0, 0}}));
    EXPECT_EQ(seen[2], (Assignment{{1, 0}, {0, 0}}));
    EXPECT_EQ(seen[3], (Assignment{{1, 1}, {0, 0}}));

    const auto s1 = enumerate_assignments(two, two, Strategy::sampled(10, 42));
    const auto s2 = enumerate_assignments(two, two, Strategy::sampled(10, 42));
    ASSERT_EQ(s1.size(), 10u);
    EXPECT_TRUE(std::equal(s1.begin(), s1.end(), s2.begin()));
}

TEST(EnumerateAssignments, SlotCountsPerConstruction) {
    const auto a = build_pool(spec(4, {Family::sylvester, Family::paley1}));  // 2 matrices, k = 4
    const auto b = build_pool(spec(2, {Family::sylvester}, 2, 1));            // 3 matrices, m = 2
    EXPECT_EQ(enumerate_assignments(a, b, Strategy::exhaustive(), Construction::modified).size(), 4u * 81u);
    EXPECT_EQ(enumerate_assignments(a, b, Strategy::exhaustive(), Construction::nosong).size(), 4u * 3u);
    EXPECT_EQ(enumerate_assignments(a, b, Strategy::exhaustive(), Construction::product).size(), 2u * 3u);
}

TEST(EnumerateAssignments, CapEnforced) {
    const auto a = build_pool(spec(8, {Family::sylvester, Family::paley1}, 4));  // 10 matrices, m = 8 slots
    const auto b = build_pool(spec(8, {Family::sylvester}, 1));
    EXPECT_THROW(enumerate_assignments(a, b, Strategy::exhaustive()), ResourceLimit);
    EXPECT_THROW(enumerate_assignments(a, b, Strategy::sampled(2'000'000, 1)), ResourceLimit);
    EXPECT_EQ(enumerate_assignments(a, b, Strategy::sampled(100, 1)).size(), 100u);
    EXPECT_THROW(enumerate_assignments(Pool{}, b, Strategy::exhaustive()), InvalidInput);
}

TEST(Explore, Examples) {
    const Pool h2{sylvester_power(1)};
    const auto r = explore(h2, h2, Strategy::exhaustive(), Construction::modified);
    EXPECT_EQ(r.target_order, 4u);
    EXPECT_EQ(r.assignments_tried, 1u);
    ASSERT_EQ(r.signatures.size(), 1u);
    EXPECT_EQ(r.signatures[0].first, (InvariantSignature{4, 3, 3, 2}));
    EXPECT_EQ(r.signatures[0].second, 1u);

    const Pool h4{sylvester_power(2)};
    const auto r16 = explore(h4, h4, Strategy::exhaustive(), Construction::modified);
    ASSERT_EQ(r16.signatures.size(), 1u);
    EXPECT_EQ(r16.signatures[0].first.order, 16u);

    EXPECT_EQ(json_of(explore(h4, h4, Strategy::exhaustive(5), Construction::modified)),
              json_of(explore(h4, h4, Strategy::exhaustive(5), Construction::modified)));
}

TEST(Explore, CollapsedPoolsMatchProduct) {
    const Pool a{paley_I(3)};
    const Pool b{paley_I(11)};
    auto mod = explore(a, b, Strategy::exhaustive(), Construction::modified);
    auto prod = explore(a, b, Strategy::exhaustive(), Construction::product);
    auto ns = explore(a, b, Strategy::exhaustive(), Construction::nosong);
    EXPECT_EQ(mod.signatures, prod.signatures);
    EXPECT_EQ(ns.signatures, prod.signatures);
}

TEST(Explore, ReportInvariantsAndParallelIndependence) {
    const auto a = build_pool(spec(4, {Family::sylvester, Family::paley1}, 1, 3));
    const auto b = build_pool(spec(4, {Family::sylvester}, 1, 4));
    for (auto c : {Construction::modified, Construction::nosong, Construction::product}) {
        const auto r1 = explore(a, b, Strategy::exhaustive(), c, {default_assignment_cap, 1});
        const auto r3 = explore(a, b, Strategy::exhaustive(), c, {default_assignment_cap, 3});
        EXPECT_EQ(r1, r3);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < r1.signatures.size(); ++i) {
            const auto& [s, n] = r1.signatures[i];
            total += n;
            EXPECT_EQ(s.order, 16u);
            EXPECT_GE(static_cast<double>(s.rank), std::log2(16.0) + 1);
            EXPECT_GE(s.dim_kernel, 1u);
            EXPECT_LE(s.dim_kernel, s.rank);
            EXPECT_EQ(s.min_distance, 8u);
            if (i > 0) {
                EXPECT_LT(r1.signatures[i - 1].first, s);
            }
        }
        EXPECT_EQ(total, r1.assignments_tried);
    }
}

TEST(Explore, SampledReportsDeterministic) {
    const auto a = build_pool(spec(8, {Family::sylvester, Family::paley1}, 2, 11));
    const auto b = build_pool(spec(4, {Family::sylvester, Family::paley1}, 2, 12));
    const auto r1 = explore(a, b, Strategy::sampled(40, 77), Construction::modified, {default_assignment_cap, 1});
    const auto r2 = explore(a, b, Strategy::sampled(40, 77), Construction::modified, {default_assignment_cap, 4});
    EXPECT_EQ(json_of(r1), json_of(r2));
    EXPECT_EQ(r1.assignments_tried, 40u);
    EXPECT_EQ(r1.seed, 77u);
}

TEST(Explore, RejectsMixedOrderPools) {
    const Pool mixed{sylvester_power(1), sylvester_power(2)};
    EXPECT_THROW(explore(mixed, mixed, Strategy::exhaustive(), Construction::modified), InvalidInput);
}

TEST(ReportSerialization, JsonAndCsvShape) {
    ExplorationReport r{16, Construction::nosong, 3, 9, {{{16, 5, 5, 8}, 2}, {{16, 6, 3, 8}, 1}}};
    EXPECT_EQ(json_of(r), R"({
  "target_order": 16,
  "construction": "nosong",
  "assignments_tried": 3,
  "seed": 9,
  "signatures": [
    {
      "order": 16,
      "rank": 5,
      "dim_kernel": 5,
      "min_distance": 8,
      "multiplicity": 2
    },
    {
      "order": 16,
      "rank": 6,
      "dim_kernel": 3,
      "min_distance": 8,
      "multiplicity": 1
    }
  ]
}
)");
    std::ostringstream csv;
    write_report_csv(csv, r);
    EXPECT_EQ(csv.str(), "order,rank,dim_kernel,min_distance,multiplicity\n16,5,5,8,2\n16,6,3,8,1\n");
}
