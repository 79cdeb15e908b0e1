#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kswap/derand.hpp"
#include "kswap/oracle.hpp"

namespace {

using namespace kswap;

bool separated_by_some_function(const SplitterFamily& fam, const std::vector<std::uint64_t>& subset) {
  for (std::size_t f = 0; f < fam.size(); ++f) {
    std::set<std::uint64_t> buckets;
    for (auto x : subset) buckets.insert(fam.bucket(f, x));
    if (buckets.size() == subset.size()) return true;
  }
  return false;
}

TEST(Splitter, SmallUniverseIsIdentity) {
  const auto fam = build_splitter(3, 2);
  EXPECT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam.buckets(), 4u);
  for (std::uint64_t x = 0; x < 3; ++x) EXPECT_EQ(fam.bucket(0, x), x);
}

TEST(Splitter, TenElementsPairs) {
  const auto fam = build_splitter(10, 2);
  EXPECT_EQ(fam.modulus(), 11u);
  EXPECT_EQ(fam.size(), 10u);
  for (std::uint64_t a = 0; a < 10; ++a)
    for (std::uint64_t b = a + 1; b < 10; ++b) EXPECT_TRUE(separated_by_some_function(fam, {a, b}));
}

TEST(Splitter, TwentyElementsTriples) {
  const auto fam = build_splitter(20, 3);
  EXPECT_EQ(fam.modulus(), 23u);
  for (std::uint64_t a = 0; a < 20; ++a)
    for (std::uint64_t b = a + 1; b < 20; ++b)
      for (std::uint64_t c = b + 1; c < 20; ++c) ASSERT_TRUE(separated_by_some_function(fam, {a, b, c}));
}

TEST(Splitter, BucketsInRangeAndTableMatches) {
  const auto fam = build_splitter(50, 3);
  for (std::size_t f = 0; f < fam.size(); f += 7) {
    const auto t = fam.table(f);
    ASSERT_EQ(t.size(), 50u);
    for (std::uint64_t x = 0; x < 50; ++x) {
      EXPECT_LT(t[x], 9u);
      EXPECT_EQ(t[x], fam.bucket(f, x));
    }
  }
}

TEST(Splitter, RejectsBadParameters) {
  EXPECT_THROW(build_splitter(0, 2), InvalidInput);
  EXPECT_THROW(build_splitter(5, 0), InvalidInput);
  EXPECT_THROW(build_splitter(std::uint64_t{1} << 40, 2), InvalidInput);
}

TEST(IsPrime, SmallValues) {
  const std::set<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (std::uint64_t v = 0; v < 30; ++v) EXPECT_EQ(is_prime(v), primes.contains(v)) << v;
}

TEST(MappingSchedule, KTwo) {
  const auto ms = mapping_schedule(2);
  const std::vector<std::vector<std::uint8_t>> expected{
      {0, 0, 1, 1}, {0, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}};
  EXPECT_EQ(ms.mappings, expected);
}

TEST(MappingSchedule, ShapeForSmallK) {
  for (std::uint64_t k = 1; k <= 6; ++k) {
    const auto ms = mapping_schedule(k);
    const std::size_t b = k * k;
    ASSERT_EQ(ms.mappings.size(), b + 1);
    for (std::size_t c = 0; c < b; ++c) EXPECT_EQ(ms.mappings.front()[c] + ms.mappings.back()[c], 1);
    for (std::size_t i = 1; i < ms.mappings.size(); ++i) {
      int diff = 0;
      for (std::size_t c = 0; c < b; ++c) diff += ms.mappings[i][c] != ms.mappings[i - 1][c];
      EXPECT_EQ(diff, 1);
    }
  }
  EXPECT_THROW(mapping_schedule(0), InvalidInput);
}

// Every k-subset of buckets gets exactly ceil(k/2) zeros under some mapping.
TEST(MappingSchedule, BalancesEveryBucketSubset) {
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const auto ms = mapping_schedule(k);
    const std::size_t b = k * k;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) != k) continue;
      bool ok = false;
      for (const auto& m : ms.mappings) {
        std::uint64_t zeros = 0;
        for (std::size_t c = 0; c < b; ++c)
          if ((mask >> c) & 1u) zeros += m[c] == 0;
        ok = ok || zeros == (k + 1) / 2;
      }
      ASSERT_TRUE(ok) << "k=" << k << " mask=" << mask;
    }
  }
}

TEST(DerandomizedSearch, FourJobExample) {
  const Instance inst(2, {5, 4, 3, 2});
  const Schedule s(inst, {0, 0, 1, 1});
  const auto r = derandomized_search(inst, s, {0, 1}, 2);
  ASSERT_TRUE(r.move);
  EXPECT_TRUE(oracle::move_is_improving(inst, s, *r.move));
}

TEST(DerandomizedSearch, EqualLoads) {
  const Instance inst(2, {6, 4, 5, 5});
  const Schedule s(inst, {0, 0, 1, 1});
  EXPECT_FALSE(derandomized_search(inst, s, {0, 1}, 4).move);
}

TEST(DerandomizedSearch, IsDeterministic) {
  const Instance inst(2, {9, 8, 7, 3, 2, 1, 13});
  const Schedule s(inst, {0, 0, 0, 1, 1, 1, 0});
  EXPECT_EQ(derandomized_search(inst, s, {0, 1}, 3).move, derandomized_search(inst, s, {0, 1}, 3).move);
}

// Property: derandomized search agrees with naive search and, in exact mode,
// with the exact-size oracle.
TEST(DerandomizedSearch, AgreesWithNaiveAndOracle) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Weight> p(1 + gen() % 12);
    for (auto& v : p) v = static_cast<Weight>(1 + gen() % 80);
    const Instance inst(2, p);
    std::vector<MachineId> a(p.size());
    for (auto& x : a) x = static_cast<MachineId>(gen() % 2);
    const Schedule s(inst, a);
    const MachinePair pair = s.load(0) >= s.load(1) ? MachinePair{0, 1} : MachinePair{1, 0};
    const int k = 1 + static_cast<int>(gen() % 4);
    const auto d = derandomized_search(inst, s, pair, k);
    ASSERT_EQ(d.found(), naive_search(inst, s, pair, k).found()) << "trial " << trial;
    if (d.move) ASSERT_TRUE(oracle::move_is_improving(inst, s, *d.move));
    const auto exact = derandomized_search_exact(inst, s, pair, k);
    ASSERT_EQ(exact.found(), oracle::improving(inst, s, k, oracle::SizeMode::exact).exists) << "trial " << trial;
    if (exact.move) {
      ASSERT_EQ(exact.move->size(), static_cast<std::size_t>(k));
      ASSERT_TRUE(oracle::move_is_improving(inst, s, *exact.move));
    }
  }
}

}  // namespace
