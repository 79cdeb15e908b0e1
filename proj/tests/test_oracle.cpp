#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kswap/oracle.hpp"

namespace {

using namespace kswap;

TEST(OracleImproving, FourJobExample) {
  const Instance inst(2, {5, 4, 3, 2});
  const Schedule s(inst, {0, 0, 1, 1});
  const auto v = oracle::improving(inst, s, 2);
  ASSERT_TRUE(v.exists);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(oracle::move_is_improving(inst, s, *v.witness));
  // swap j1 <-> j3 (gain 2) is one of the improving moves
  EXPECT_TRUE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {1}, {3}, 2}));
}

TEST(OracleImproving, EqualLoads) {
  const Instance inst(2, {3, 3});
  const Schedule s(inst, {0, 1});
  const auto v = oracle::improving(inst, s, 2);
  EXPECT_FALSE(v.exists);
  EXPECT_FALSE(v.witness);
}

TEST(OracleImproving, AllSevenCandidatesFail) {
  const Instance inst(2, {4, 3, 5});
  const Schedule s(inst, {0, 0, 1});
  const auto v = oracle::improving(inst, s, 2);
  EXPECT_FALSE(v.exists);
  EXPECT_EQ(v.enumerated, 6u);  // subsets of size 1..2 out of 3 jobs
  EXPECT_FALSE(oracle::improving(inst, s, 3).exists);
}

TEST(OracleImproving, ExactSizeMode) {
  const Instance inst(2, {6, 5, 2});
  const Schedule s(inst, {0, 0, 1});
  EXPECT_TRUE(oracle::improving(inst, s, 1, oracle::SizeMode::exact).exists);
  const auto two = oracle::improving(inst, s, 2, oracle::SizeMode::exact);
  EXPECT_TRUE(two.exists);
  EXPECT_EQ(two.witness->size(), 2u);
}

TEST(OracleImproving, Guards) {
  const Instance big(2, std::vector<Weight>(21, 1));
  EXPECT_THROW(oracle::improving(big, Schedule::all_on(big, 0), 2), GuardExceeded);
  const Instance small(2, {1});
  EXPECT_THROW(oracle::improving(small, Schedule::all_on(small, 0), 0), InvalidInput);
}

TEST(OracleMove, RejectsMalformed) {
  const Instance inst(2, {5, 4, 3, 2});
  const Schedule s(inst, {0, 0, 1, 1});
  EXPECT_FALSE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {0}, {3}, 4}));   // wrong gain
  EXPECT_FALSE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {2}, {}, 3}));    // wrong side
  EXPECT_FALSE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {0, 0}, {}, 10})); // repeated job
  EXPECT_FALSE(oracle::move_is_improving(inst, s, SwapMove{0, 0, {0}, {}, 5}));
  EXPECT_FALSE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {}, {}, 0}));
  EXPECT_FALSE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {1}, {}, 4}));    // gain == delta
  EXPECT_TRUE(oracle::move_is_improving(inst, s, SwapMove{0, 1, {0}, {3}, 3}));
}

TEST(OracleKSum, Examples) {
  EXPECT_TRUE(oracle::ksum({1, 2, -3}, 3).exists);
  EXPECT_FALSE(oracle::ksum({1, 2, 4}, 2).exists);
  const auto v = oracle::ksum({5, -5, 3}, 2);
  EXPECT_TRUE(v.exists);
  EXPECT_EQ(v.indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(oracle::ksum({0}, 2).exists);  // distinct indices only
  EXPECT_THROW(oracle::ksum(std::vector<std::int64_t>(25, 1), 2), GuardExceeded);
}

TEST(OracleOptimum, Examples) {
  EXPECT_EQ(oracle::optimum_two_machines(Instance(2, {5, 4, 3, 2})), 7);
  EXPECT_EQ(oracle::optimum_two_machines(Instance(2, {1})), 1);
  EXPECT_EQ(oracle::optimum_two_machines(Instance(2, {9, 9})), 9);
  EXPECT_THROW(oracle::optimum_two_machines(Instance(3, {1, 2})), InvalidInput);
}

// Plain recursion as a second opinion on the Gray-code walk.
Weight best_split(const std::vector<Weight>& p, std::size_t i, Weight left, Weight right) {
  if (i == p.size()) return std::max(left, right);
  return std::min(best_split(p, i + 1, left + p[i], right), best_split(p, i + 1, left, right + p[i]));
}

TEST(OracleOptimum, MatchesRecursion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Weight> p(1 + rng() % 14);
    for (auto& v : p) v = static_cast<Weight>(1 + rng() % 1000);
    ASSERT_EQ(oracle::optimum_two_machines(Instance(2, p)), best_split(p, 0, 0, 0));
  }
}

// Property: the verdict does not depend on job numbering or machine labels.
TEST(OracleImproving, InvariantUnderRelabeling) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t m = 2 + rng() % 3;
    std::vector<Weight> p(n);
    for (auto& v : p) v = static_cast<Weight>(1 + rng() % 50);
    std::vector<MachineId> a(n);
    for (auto& x : a) x = static_cast<MachineId>(rng() % m);
    const int k = 1 + static_cast<int>(rng() % 3);
    const bool base = oracle::improving(Instance(m, p), Schedule(Instance(m, p), a), k).exists;

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<MachineId> relabel(m);
    std::iota(relabel.begin(), relabel.end(), MachineId{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Weight> p2(n);
    std::vector<MachineId> a2(n);
    for (std::size_t j = 0; j < n; ++j) {
      p2[perm[j]] = p[j];
      a2[perm[j]] = relabel[a[j]];
    }
    const Instance inst2(m, p2);
    ASSERT_EQ(oracle::improving(inst2, Schedule(inst2, a2), k).exists, base) << "trial " << trial;
  }
}

}  // namespace
