#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "kswap/driver.hpp"
#include "kswap/generators.hpp"
#include "kswap/io.hpp"
#include "kswap/seed.hpp"

namespace kswap {

struct ClassPreset {
  std::string_view label;
  std::size_t n;
  std::size_t m;
  int max_k;
};

/// Instance classes C1..C9: n in {50, 100, 200} x m in {2, 5, 10}, 50 instances each.
inline constexpr std::array<ClassPreset, 9> kClassPresets{{
    {"C1", 50, 2, 9},
    {"C2", 100, 2, 6},
    {"C3", 200, 2, 5},
    {"C4", 50, 5, 9},
    {"C5", 100, 5, 6},
    {"C6", 200, 5, 5},
    {"C7", 50, 10, 9},
    {"C8", 100, 10, 6},
    {"C9", 200, 10, 5},
}};

inline constexpr std::size_t kClassInstanceCount = 50;

inline std::optional<ClassPreset> find_preset(std::string_view label) {
  for (const auto& p : kClassPresets)
    if (p.label == label) return p;
  return std::nullopt;
}

/// Largest k benchmarked for n jobs, following the class table (9 up to 50
/// jobs, 6 up to 100, 5 beyond).
inline int max_k_for(std::size_t n) {
  if (n <= 50) return 9;
  if (n <= 100) return 6;
  return 5;
}

struct BenchSpec {
  std::string label = "custom";
  std::size_t n = 50;
  std::size_t m = 2;
  std::size_t count = kClassInstanceCount;
  std::uint64_t seed = 1;
  std::vector<int> ks{1, 2};
  std::vector<OperatorKind> operators{OperatorKind::naive, OperatorKind::randomized};
  std::uint64_t lo = kDefaultLo;
  std::uint64_t hi = kDefaultHi;
  std::optional<std::uint64_t> iteration_cap;
  unsigned threads = 1;
};

inline std::uint64_t instance_seed(std::uint64_t master, std::size_t instance_id) {
  return derive_seed(master, "instance", {instance_id});
}

inline std::uint64_t search_seed(std::uint64_t master, std::size_t instance_id, int k, OperatorKind op) {
  return derive_seed(master, "search", {instance_id, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(op)});
}

inline void validate_bench_spec(const BenchSpec& spec) {
  if (spec.n < 1) throw InvalidInput("n must be positive");
  if (spec.m < 2) throw InvalidInput("m must be at least 2");
  if (spec.ks.empty()) throw InvalidInput("no k values given");
  if (spec.operators.empty()) throw InvalidInput("no operators given");
  const int cap = max_k_for(spec.n);
  for (int k : spec.ks) {
    if (k < 1) throw InvalidInput("k must be positive");
    if (k > cap) throw InvalidInput("k=" + std::to_string(k) + " exceeds the cap of " + std::to_string(cap) +
                                    " for n=" + std::to_string(spec.n));
  }
}

/// Runs every (instance, k, operator) combination from an LPT start. Rows are
/// ordered by instance, then k, then operator in the order given.
inline std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  validate_bench_spec(spec);
  std::vector<std::vector<BenchRow>> per_instance(spec.count);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(spec.count);

  auto worker = [&] {
    for (std::size_t id = next++; id < spec.count; id = next++) try {
      const std::uint64_t iseed = instance_seed(spec.seed, id);
      const Instance inst = gen_uniform(spec.n, spec.m, iseed, spec.lo, spec.hi);
      auto& rows = per_instance[id];
      for (int k : spec.ks) {
        for (OperatorKind op : spec.operators) {
          LocalSearchOptions opts;
          opts.iteration_cap = spec.iteration_cap;
          const auto run = local_search(inst, {op, k, 0}, search_seed(spec.seed, id, k, op), opts);
          using ms = std::chrono::duration<double, std::milli>;
          const double total = ms(run.stats.search_time).count();
          BenchRow row;
          row.class_label = spec.label;
          row.instance_id = id;
          row.n = spec.n;
          row.m = spec.m;
          row.k = k;
          row.op = std::string(to_string(op));
          row.seed = iseed;
          row.improving_iterations = run.stats.improving_iterations;
          row.total_time_ms = total;
          row.avg_step_time_ms = total / static_cast<double>(std::max<std::uint64_t>(1, run.stats.operator_invocations));
          row.final_makespan = run.schedule.makespan();
          rows.push_back(std::move(row));
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(std::max<std::size_t>(1, spec.count))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<BenchRow> out;
  for (auto& rows : per_instance)
    for (auto& r : rows) out.push_back(std::move(r));
  return out;
}

}  // namespace kswap
