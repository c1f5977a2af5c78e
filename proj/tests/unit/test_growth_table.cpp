#include <gtest/gtest.h>

#include <thread>

#include "gotzmann/growth.hpp"
#include "gotzmann/growth_table.hpp"

using namespace gotzmann;

TEST(GrowthTable, MemoizesWithFormulaTags) {
  GrowthTable table;
  EXPECT_EQ(table.growth_S(4, 3), 8u);
  ASSERT_TRUE(table.find_S(4, 3));
  EXPECT_EQ(table.find_S(4, 3)->formula, GrowthFormula::BinomialRep);
  EXPECT_EQ(table.growth_R(3, 3, 3, 2), 5u);
  EXPECT_EQ(table.find_R(3, 3, 3, 2)->formula, GrowthFormula::Boundary);
  table.growth_R(3, 3, 2, 2);
  EXPECT_EQ(table.find_R(3, 3, 2, 2)->formula, GrowthFormula::Difference);
  table.growth_R(1, 3, 4, 1);
  EXPECT_EQ(table.find_R(1, 3, 4, 1)->formula, GrowthFormula::BelowBoundary);
  EXPECT_EQ(table.size(), 4u);
}

TEST(GrowthTable, DisabledAndOracleChecked) {
  GrowthTable off({.capacity = 16, .enabled = false, .check_with_oracle = false});
  GrowthTable checked({.capacity = 16, .enabled = true, .check_with_oracle = true});
  for (Count d = 1; d <= 9; ++d) {
    EXPECT_EQ(off.growth_R(d, 3, 2, 4), growth_R(d, 3, 2, 4));
    EXPECT_EQ(checked.growth_R(d, 3, 2, 4), growth_R(d, 3, 2, 4));
  }
  EXPECT_EQ(off.size(), 0u);
  EXPECT_TRUE(checked.find_R(5, 3, 2, 4)->oracle_checked);
}

TEST(GrowthTable, CapacityBound) {
  GrowthTable small({.capacity = 4, .enabled = true, .check_with_oracle = false});
  for (Count d = 1; d <= 20; ++d) EXPECT_EQ(small.growth_S(d, 4), growth_S(d, 4));
  EXPECT_LE(small.size(), 4u);
}

TEST(GrowthTable, ConcurrentReaders) {
  GrowthTable table;
  std::vector<std::thread> pool;
  std::vector<Count> sums(4, 0);
  for (int k = 0; k < 4; ++k)
    pool.emplace_back([&, k] {
      for (Count d = 1; d <= 200; ++d) sums[k] += table.growth_S(d, 4);
    });
  for (auto& th : pool) th.join();
  for (int k = 1; k < 4; ++k) EXPECT_EQ(sums[k], sums[0]);
}
