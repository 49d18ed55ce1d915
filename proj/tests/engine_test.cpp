#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures/published_tables.hpp"
#include "memgame/engine.hpp"
#include "memgame/error.hpp"

namespace memgame {
namespace {

std::vector<MoveRule> all_rules()
{
    return {MoveRule::mem(),        MoveRule::mem_plus(),           MoveRule::mem_zero(),
            MoveRule::dudeney(3),   MoveRule::dudeney(8),           MoveRule::linear_scale({2, 1}),
            MoveRule::linear_scale({1, 1}), MoveRule::linear_scale({5, 3})};
}

TEST(Mex, Examples)
{
    EXPECT_EQ(mex({}), 0);
    const std::vector<Grundy> a{0, 1, 2, 4};
    EXPECT_EQ(mex(a), 3);
    const std::vector<Grundy> b{1, 2, 3};
    EXPECT_EQ(mex(b), 0);
    const std::vector<Grundy> c{0, 0, 1, 1, 5};
    EXPECT_EQ(mex(c), 2);
}

TEST(MexWithout, Examples)
{
    // S = {0, 1, 1, 2}
    const std::vector<std::uint32_t> counts{1, 2, 1, 0, 0, 0};
    EXPECT_EQ(mex_without(counts, 3, 0), 0);
    EXPECT_EQ(mex_without(counts, 3, 1), 3);
    EXPECT_EQ(mex_without(counts, 3, 2), 2);
    // S = {0, 1, 2}
    const std::vector<std::uint32_t> small{1, 1, 1};
    EXPECT_THROW(mex_without(small, 3, 5), PreconditionViolation);
    EXPECT_THROW(mex_without(counts, 3, 3), PreconditionViolation);
}

TEST(MexWithout, AgreesWithRecomputation)
{
    std::mt19937 rng(20241018);
    std::uniform_int_distribution<int> size_dist(1, 30);
    std::uniform_int_distribution<int> value_dist(0, 19);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Grundy> values(size_dist(rng));
        for (auto& v : values)
            v = static_cast<Grundy>(value_dist(rng));
        std::vector<std::uint32_t> counts(21, 0);
        for (auto v : values)
            ++counts[v];
        const Grundy mex_s = mex(values);
        const Grundy x = values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
        auto removed = values;
        removed.erase(std::find(removed.begin(), removed.end(), x));
        ASSERT_EQ(mex_without(counts, mex_s, x), mex(removed)) << "trial " << trial;
    }
}

TEST(Oracle, PublishedCells)
{
    EXPECT_EQ(grundy_oracle(MoveRule::mem_plus(), Position::exactly(5, 1)), 2);
    EXPECT_EQ(grundy_oracle(MoveRule::mem(), Position::exactly(20, 1)), 7);
    EXPECT_EQ(grundy_oracle(MoveRule::mem_zero(), Position::exactly(10, 6)), 3);
    EXPECT_EQ(grundy_oracle(MoveRule::mem_zero(), Position::exactly(19, 2)), 9);
    EXPECT_EQ(grundy_oracle(MoveRule::mem(), Position::exactly(1, 2)), 0);
    EXPECT_EQ(grundy_oracle(MoveRule::mem_zero(), Position::start(0)), 0);
}

TEST(Oracle, DeepChainDoesNotRecurse)
{
    // Under scale:1/1 the position n_1 only allows single-stone removals.
    GrundyOracle oracle(MoveRule::linear_scale({1, 1}));
    EXPECT_EQ(oracle.value(Position::exactly(20000, 1)), 0);
    EXPECT_EQ(oracle.value(Position::exactly(20001, 1)), 1);
    EXPECT_GE(oracle.memo_size(), 20000u);
}

TEST(ComputeTable, MatchesPublishedTables)
{
    const std::pair<MoveRule, const fixtures::Table20*> cases[] = {
        {MoveRule::mem_plus(), &fixtures::kMemPlusTable},
        {MoveRule::mem(), &fixtures::kMemTable},
        {MoveRule::mem_zero(), &fixtures::kMemZeroTable},
    };
    for (const auto& [rule, expected] : cases) {
        const auto table = compute_table(rule, 20);
        for (Count n = 1; n <= 20; ++n)
            for (Count k = 1; k <= 20; ++k)
                EXPECT_EQ(table.exactly(n, k), (*expected)[n - 1][k - 1]) << rule.to_string() << " " << n << "_" << k;
    }
}

TEST(ComputeTable, MemZeroFrontierColumn)
{
    const auto table = compute_table(MoveRule::mem_zero(), 20);
    const std::vector<Grundy> expected{1, 1, 2, 3, 3, 2, 4, 5, 5, 6, 7, 7, 6, 4, 8, 9, 9, 8, 10, 11};
    for (Count n = 1; n <= 20; ++n)
        EXPECT_EQ(table.frontier(n), expected[n - 1]) << n;
}

TEST(ComputeTable, EqualsOracleForEveryRule)
{
    for (const auto& rule : all_rules()) {
        const auto table = compute_table(rule, 100);
        GrundyOracle oracle(rule);
        for (Count n = 0; n <= 100; ++n)
            for (Count tag = 0; tag <= n + 1; ++tag)
                ASSERT_EQ(table.at(n, tag), oracle.value(Position::from_tag(n, tag)))
                    << rule.to_string() << " " << Position::from_tag(n, tag).to_string();
    }
}

// With a cap above every heap, Dudeney is Mem0 computed through the generic path.
TEST(ComputeTable, GenericPathReproducesMemZero)
{
    const auto fast = compute_table(MoveRule::mem_zero(), 400);
    const auto generic = compute_table(MoveRule::dudeney(1000), 400);
    for (Count n = 0; n <= 400; ++n)
        for (Count tag = 0; tag <= n + 1; ++tag)
            ASSERT_EQ(fast.at(n, tag), generic.at(n, tag)) << n << " " << tag;
}

TEST(ComputeTable, CellInvariants)
{
    for (const auto& rule : all_rules()) {
        const auto table = compute_table(rule, 150);
        for (Count n = 0; n <= 150; ++n)
            for (Grundy v : table.row(n))
                ASSERT_LE(v, n);
    }
    const auto zero = compute_table(MoveRule::mem_zero(), 500);
    for (Count n = 0; n <= 500; ++n)
        ASSERT_EQ(zero.start(n), zero.frontier(n));
}

TEST(ComputeTable, SuffixMexIsMonotone)
{
    for (const auto& rule : {MoveRule::mem(), MoveRule::mem_plus()}) {
        const auto table = compute_table(rule, 500);
        for (Count n = 1; n <= 500; ++n)
            for (Count k = 2; k <= n + 1; ++k)
                ASSERT_LE(table.exactly(n, k), table.exactly(n, k - 1)) << rule.to_string() << " " << n << "_" << k;
    }
}

TEST(ComputeTable, ZeroBoundary)
{
    const auto plus = compute_table(MoveRule::mem_plus(), 300);
    const auto mem = compute_table(MoveRule::mem(), 300);
    for (Count n = 1; n <= 300; ++n) {
        for (Count k = 1; k <= n + 1; ++k) {
            ASSERT_EQ(plus.exactly(n, k) == 0, k >= n) << n << "_" << k;
            ASSERT_EQ(mem.exactly(n, k) == 0, k > n) << n << "_" << k;
        }
    }
}

TEST(ComputeTable, Limits)
{
    EXPECT_THROW(compute_table(MoveRule::mem(), 0), PreconditionViolation);
    EXPECT_THROW(compute_table(MoveRule::mem(), kMaxTableN + 1), CapacityError);
    TableOptions tight;
    tight.memory_budget = 1000;
    EXPECT_THROW(compute_table(MoveRule::mem(), 100, tight), CapacityError);
    TableOptions budget;
    budget.option_budget = 1000;
    EXPECT_THROW(compute_table(MoveRule::dudeney(4), 100, budget), CapacityError);
    EXPECT_NO_THROW(compute_table(MoveRule::mem_zero(), 100, budget));
}

TEST(GrundyTable, FromRowsValidatesShape)
{
    EXPECT_THROW(GrundyTable::from_rows(MoveRule::mem(), {}), PreconditionViolation);
    EXPECT_THROW(GrundyTable::from_rows(MoveRule::mem(), {{0, 0}, {1, 1}}), PreconditionViolation);
    const auto t = GrundyTable::from_rows(MoveRule::mem(), {{0, 0}, {1, 1, 0}});
    EXPECT_EQ(t.max_n(), 1u);
    EXPECT_EQ(t.exactly(1, 1), 1);
    EXPECT_EQ(t.exactly(1, 9), 0);
    EXPECT_EQ(t.max_value(), 1);
}

} // namespace
} // namespace memgame
