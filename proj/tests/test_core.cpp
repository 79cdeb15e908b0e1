#include <gtest/gtest.h>

#include <random>

#include "kswap/core.hpp"

namespace {

using namespace kswap;

Schedule two_machine(const Instance& inst, std::vector<MachineId> a) { return {inst, std::move(a)}; }

TEST(Instance, RejectsBadParameters) {
  EXPECT_THROW(Instance(1, {1}), InvalidInput);
  EXPECT_THROW(Instance(2, {}), InvalidInput);
  EXPECT_THROW(Instance(2, {3, -1}), InvalidInput);
  EXPECT_THROW(Instance(2, {kMaxProcessingTime}), InvalidInput);
  EXPECT_THROW(Instance(2, {kMaxProcessingTime - 1, kMaxProcessingTime - 1}), InvalidInput);
  EXPECT_NO_THROW(Instance(2, {kMaxProcessingTime - 1}));
  EXPECT_NO_THROW(Instance(2, {0, 0}));
}

TEST(ComputeLoads, DirectSummation) {
  const Instance inst(2, {4, 3, 2});
  const std::vector<MachineId> a{0, 0, 1};
  const auto r = compute_loads(inst, a);
  EXPECT_EQ(r.loads, (std::vector<Weight>{7, 2}));
  EXPECT_EQ(r.summary.l_max, 7);
  EXPECT_EQ(r.summary.l_min, 2);
  EXPECT_EQ(r.summary.delta, 5);
  EXPECT_EQ(r.summary.critical, (std::vector<MachineId>{0}));
}

TEST(ComputeLoads, EmptyMachine) {
  const Instance inst(2, {5});
  const std::vector<MachineId> a{0};
  const auto r = compute_loads(inst, a);
  EXPECT_EQ(r.loads, (std::vector<Weight>{5, 0}));
  EXPECT_EQ(r.summary.delta, 5);
}

TEST(ComputeLoads, TiedCriticalMachines) {
  const Instance inst(2, {2, 2});
  const std::vector<MachineId> a{0, 1};
  const auto r = compute_loads(inst, a);
  EXPECT_EQ(r.summary.delta, 0);
  EXPECT_EQ(r.summary.critical, (std::vector<MachineId>{0, 1}));
}

TEST(ComputeLoads, RejectsBadAssignment) {
  const Instance inst(2, {1, 2});
  const std::vector<MachineId> short_a{0};
  const std::vector<MachineId> out_of_range{0, 2};
  EXPECT_THROW(compute_loads(inst, short_a), InvalidInput);
  EXPECT_THROW(compute_loads(inst, out_of_range), InvalidInput);
}

TEST(IsImproving, OpenInterval) {
  // loads (9, 5): swap 5 out, 3 in; gain 2 in (0, 4)
  const Instance inst(2, {5, 4, 3, 2});
  const auto s = two_machine(inst, {0, 0, 1, 1});
  EXPECT_TRUE(is_improving(inst, s, make_move(inst, {0, 1}, {0}, {2})));
  // gain 4 == delta is excluded
  EXPECT_FALSE(is_improving(inst, s, make_move(inst, {0, 1}, {1}, {})));
  // negative gain
  EXPECT_FALSE(is_improving(inst, s, make_move(inst, {0, 1}, {}, {2})));
}

TEST(IsImproving, EqualLoadsNeverImprove) {
  const Instance flat(2, {5, 3, 4, 4});
  const auto t = two_machine(flat, {0, 0, 1, 1});  // (8, 8)
  ASSERT_EQ(t.load(0), t.load(1));
  for (const auto& mv : {make_move(flat, {0, 1}, {0}, {}), make_move(flat, {0, 1}, {0}, {2}),
                         make_move(flat, {0, 1}, {1}, {2}), make_move(flat, {1, 0}, {2}, {1})})
    EXPECT_FALSE(is_improving(flat, t, mv));
}

TEST(IsImproving, JumpExample) {
  // loads (11, 2), jump of p=6
  const Instance inst(2, {6, 5, 2});
  auto s = two_machine(inst, {0, 0, 1});
  const auto mv = make_move(inst, {0, 1}, {0}, {});
  EXPECT_TRUE(is_improving(inst, s, mv));
  apply_move(inst, s, mv);
  EXPECT_EQ(s.load(0), 5);
  EXPECT_EQ(s.load(1), 8);
}

TEST(ApplyMove, SwapExample) {
  const Instance inst(2, {5, 4, 3, 2});
  auto s = two_machine(inst, {0, 0, 1, 1});
  apply_move(inst, s, make_move(inst, {0, 1}, {0}, {2}));
  EXPECT_EQ(s.load(0), 7);
  EXPECT_EQ(s.load(1), 7);
  EXPECT_EQ(s.machine_of(0), 1u);
  EXPECT_EQ(s.machine_of(2), 0u);
}

TEST(ApplyMove, MalformedMoveLeavesScheduleUntouched) {
  const Instance inst(2, {5, 4, 3, 2});
  auto s = two_machine(inst, {0, 0, 1, 1});
  const Schedule before = s;
  SwapMove wrong_side = make_move(inst, {0, 1}, {0, 2}, {});  // job 2 is on machine 1
  EXPECT_THROW(apply_move(inst, s, wrong_side), InvalidInput);
  SwapMove bad_gain = make_move(inst, {0, 1}, {0}, {2});
  bad_gain.gain += 1;
  EXPECT_THROW(apply_move(inst, s, bad_gain), InvalidInput);
  SwapMove dup{0, 1, {0, 0}, {}, 10};
  EXPECT_THROW(apply_move(inst, s, dup), InvalidInput);
  SwapMove same{0, 0, {0}, {}, 5};
  EXPECT_THROW(apply_move(inst, s, same), InvalidInput);
  SwapMove empty{0, 1, {}, {}, 0};
  EXPECT_THROW(apply_move(inst, s, empty), InvalidInput);
  SwapMove far{0, 5, {0}, {}, 5};
  EXPECT_THROW(apply_move(inst, s, far), InvalidInput);
  EXPECT_EQ(s, before);
  EXPECT_THROW((void)is_improving(inst, s, wrong_side), InvalidInput);
}

// Property: cached loads equal recomputed loads after random moves, and a
// move followed by its reverse restores the schedule.
TEST(ScheduleProperty, LoadsStayConsistentAndMovesInvert) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const std::size_t m = 2 + rng() % 3;
    std::vector<Weight> p(n);
    for (auto& v : p) v = static_cast<Weight>(rng() % 1000);
    const Instance inst(m, p);
    std::vector<MachineId> a(n);
    for (auto& x : a) x = static_cast<MachineId>(rng() % m);
    Schedule s(inst, a);
    for (int step = 0; step < 20; ++step) {
      const auto src = static_cast<MachineId>(rng() % m);
      auto dst = static_cast<MachineId>(rng() % m);
      if (dst == src) dst = static_cast<MachineId>((dst + 1) % m);
      std::vector<JobId> out, in;
      for (JobId j = 0; j < n; ++j) {
        if (s.machine_of(j) == src && rng() % 2) out.push_back(j);
        if (s.machine_of(j) == dst && rng() % 2) in.push_back(j);
      }
      if (out.empty() && in.empty()) continue;
      const auto mv = make_move(inst, {src, dst}, out, in);
      const Schedule before = s;
      apply_move(inst, s, mv);
      const auto recomputed = compute_loads(inst, s.assignment());
      ASSERT_TRUE(std::equal(recomputed.loads.begin(), recomputed.loads.end(), s.loads().begin()));
      Weight total = 0;
      for (Weight l : s.loads()) total += l;
      ASSERT_EQ(total, inst.total());
      Schedule undone = s;
      apply_move(inst, undone, reversed(mv));
      ASSERT_EQ(undone, before);
    }
  }
}

TEST(Weight, ToStringAndParseRoundTrip) {
  for (Weight v : {Weight{0}, Weight{1}, Weight{-1}, pow2(100) + 12345, -pow2(90), kWeightMax}) {
    Weight back = 0;
    ASSERT_TRUE(parse_weight(to_string(v), back));
    EXPECT_EQ(back, v);
  }
  Weight out = 0;
  EXPECT_FALSE(parse_weight("", out));
  EXPECT_FALSE(parse_weight("12a", out));
  EXPECT_FALSE(parse_weight("-", out));
  EXPECT_FALSE(parse_weight("170141183460469231731687303715884105728", out));  // 2^127
}

TEST(Weight, CheckedArithmetic) {
  EXPECT_THROW(checked_add(kWeightMax, 1), InvalidInput);
  EXPECT_THROW(checked_mul(pow2(64), pow2(64)), InvalidInput);
  EXPECT_EQ(checked_mul(pow2(60), 4), pow2(62));
}

}  // namespace
