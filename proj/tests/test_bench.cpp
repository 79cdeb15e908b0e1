#include <gtest/gtest.h>

#include "kswap/bench.hpp"

namespace {

using namespace kswap;

TEST(Presets, ClassTable) {
  const std::vector<std::tuple<std::string_view, std::size_t, std::size_t, int>> expected{
      {"C1", 50, 2, 9},  {"C2", 100, 2, 6}, {"C3", 200, 2, 5},  {"C4", 50, 5, 9},  {"C5", 100, 5, 6},
      {"C6", 200, 5, 5}, {"C7", 50, 10, 9}, {"C8", 100, 10, 6}, {"C9", 200, 10, 5}};
  for (const auto& [label, n, m, k] : expected) {
    const auto p = find_preset(label);
    ASSERT_TRUE(p) << label;
    EXPECT_EQ(p->n, n);
    EXPECT_EQ(p->m, m);
    EXPECT_EQ(p->max_k, k);
    EXPECT_EQ(max_k_for(n), k);
  }
  EXPECT_FALSE(find_preset("C10"));
  EXPECT_EQ(kClassInstanceCount, 50u);
}

TEST(Bench, RejectsBadParameters) {
  BenchSpec spec;
  spec.n = 200;
  spec.ks = {6};
  EXPECT_THROW(run_bench(spec), InvalidInput);
  spec.ks = {0};
  EXPECT_THROW(run_bench(spec), InvalidInput);
  spec.ks = {1};
  spec.m = 1;
  EXPECT_THROW(run_bench(spec), InvalidInput);
  spec.m = 2;
  spec.operators.clear();
  EXPECT_THROW(run_bench(spec), InvalidInput);
}

TEST(Bench, ZeroInstancesGiveNoRows) {
  BenchSpec spec;
  spec.count = 0;
  EXPECT_TRUE(run_bench(spec).empty());
}

TEST(Bench, RowsOrderedByInstanceThenKThenOperator) {
  BenchSpec spec;
  spec.label = "C4";
  spec.n = 50;
  spec.m = 5;
  spec.count = 3;
  spec.ks = {1, 2, 3};
  spec.operators = {OperatorKind::naive, OperatorKind::randomized, OperatorKind::derandomized};
  const auto rows = run_bench(spec);
  ASSERT_EQ(rows.size(), 27u);
  std::size_t i = 0;
  for (std::size_t id = 0; id < 3; ++id)
    for (int k : spec.ks)
      for (auto op : spec.operators) {
        const auto& r = rows[i++];
        EXPECT_EQ(r.class_label, "C4");
        EXPECT_EQ(r.instance_id, id);
        EXPECT_EQ(r.k, k);
        EXPECT_EQ(r.op, to_string(op));
        EXPECT_EQ(r.n, 50u);
        EXPECT_EQ(r.m, 5u);
        EXPECT_EQ(r.seed, instance_seed(spec.seed, id));
        EXPECT_GE(r.total_time_ms, r.avg_step_time_ms);
        EXPECT_GE(r.avg_step_time_ms, 0.0);
      }
}

TEST(Bench, FinalMakespanMatchesRerunFromSeedColumn) {
  BenchSpec spec;
  spec.n = 40;
  spec.m = 3;
  spec.count = 2;
  spec.ks = {2};
  spec.operators = {OperatorKind::naive};
  for (const auto& r : run_bench(spec)) {
    const Instance inst = gen_uniform(r.n, r.m, r.seed);
    EXPECT_EQ(local_search(inst, {OperatorKind::naive, 2, 0}, 0).schedule.makespan(), r.final_makespan);
  }
}

TEST(Bench, DeterministicAcrossRunsAndThreads) {
  BenchSpec spec;
  spec.n = 50;
  spec.m = 2;
  spec.count = 6;
  spec.seed = 77;
  spec.ks = {1, 2, 3};
  spec.operators = {OperatorKind::naive, OperatorKind::randomized, OperatorKind::derandomized};
  const auto a = run_bench(spec);
  spec.threads = 3;
  const auto b = run_bench(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].improving_iterations, b[i].improving_iterations);
    EXPECT_EQ(a[i].final_makespan, b[i].final_makespan);
    EXPECT_EQ(a[i].seed, b[i].seed);
  }
  spec.seed = 78;
  const auto c = run_bench(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].final_makespan != c[i].final_makespan;
  EXPECT_TRUE(differs);
}

TEST(Bench, WorkerErrorsPropagate) {
  BenchSpec spec;
  spec.count = 4;
  spec.threads = 2;
  spec.lo = 0;  // rejected by the generator inside the workers
  EXPECT_THROW(run_bench(spec), InvalidInput);
}

TEST(Seeds, NamedStreamsAreDistinct) {
  EXPECT_NE(derive_seed(1, "instance", {0}), derive_seed(1, "search", {0}));
  EXPECT_NE(derive_seed(1, "instance", {0}), derive_seed(2, "instance", {0}));
  EXPECT_NE(derive_seed(1, "instance", {0, 1}), derive_seed(1, "instance", {1, 0}));
  EXPECT_EQ(search_seed(5, 3, 2, OperatorKind::randomized), search_seed(5, 3, 2, OperatorKind::randomized));
  EXPECT_NE(search_seed(5, 3, 2, OperatorKind::randomized), search_seed(5, 3, 2, OperatorKind::naive));
}

}  // namespace
