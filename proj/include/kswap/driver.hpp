#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kswap/derand.hpp"
#include "kswap/neighborhood.hpp"

namespace kswap {

enum class OperatorKind { naive, randomized, derandomized };

inline std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::naive: return "naive";
    case OperatorKind::randomized: return "randomized";
    case OperatorKind::derandomized: return "derandomized";
  }
  return "?";
}

inline OperatorKind parse_operator(std::string_view name) {
  if (name == "naive") return OperatorKind::naive;
  if (name == "randomized") return OperatorKind::randomized;
  if (name == "derandomized") return OperatorKind::derandomized;
  throw InvalidInput("unknown operator '" + std::string(name) + "'");
}

struct OperatorConfig {
  OperatorKind kind = OperatorKind::naive;
  int k_max = 2;
  /// Failed randomized batches before a pair counts as exhausted; 0 picks
  /// max(1, ceil(ln n)).
  std::uint64_t retry_batches = 0;
};

inline std::uint64_t default_retry_batches(std::size_t n) {
  const auto b = static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(n))));
  return std::max<std::uint64_t>(1, b);
}

/// Greedy: non-increasing p (ties by id), each job to the least-loaded
/// machine (ties to the lowest index).
inline Schedule lpt_schedule(const Instance& inst) {
  std::vector<JobId> order(inst.jobs());
  std::iota(order.begin(), order.end(), JobId{0});
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) { return inst.p(a) > inst.p(b); });
  std::vector<Weight> loads(inst.machines(), 0);
  std::vector<MachineId> assignment(inst.jobs(), 0);
  for (JobId j : order) {
    const auto target = static_cast<MachineId>(std::min_element(loads.begin(), loads.end()) - loads.begin());
    assignment[j] = target;
    loads[target] += inst.p(j);
  }
  return {inst, std::move(assignment)};
}

/// 1-based rank of each job in the ascending order of processing times,
/// ties broken by ascending job id.
inline std::vector<std::uint64_t> job_ranks(const Instance& inst) {
  std::vector<JobId> order(inst.jobs());
  std::iota(order.begin(), order.end(), JobId{0});
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) { return inst.p(a) < inst.p(b); });
  std::vector<std::uint64_t> rank(inst.jobs());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos + 1;
  return rank;
}

inline std::uint64_t phi(std::span<const std::uint64_t> ranks, const Schedule& s, MachineId machine) {
  if (machine >= s.machines()) throw InvalidInput("machine index out of range");
  std::uint64_t total = 0;
  const auto assignment = s.assignment();
  for (std::size_t j = 0; j < assignment.size(); ++j)
    if (assignment[j] == machine) total += ranks[j];
  return total;
}

/// Sum of ranks of the jobs on `machine`.
inline std::uint64_t phi(const Instance& inst, const Schedule& s, MachineId machine) {
  return phi(job_ranks(inst), s, machine);
}

struct IterationRecord {
  std::size_t move_size = 0;
  Weight gain = 0;
  MachineId src = 0;
  MachineId dst = 0;
  Weight delta_before = 0;  // global L_max - L_min
  Weight delta_after = 0;
  Weight makespan_before = 0;
  Weight makespan_after = 0;
  std::uint64_t phi_before = 0;  // of src
  std::uint64_t phi_after = 0;
  MachineId critical_after = 0;  // lowest-index critical machine after the move
  bool src_still_critical = false;
};

struct RunStats {
  std::uint64_t improving_iterations = 0;
  std::uint64_t operator_invocations = 0;
  std::uint64_t repetitions_used = 0;
  std::uint64_t subsets_enumerated = 0;
  std::chrono::nanoseconds search_time{0};
  std::chrono::nanoseconds wall_time{0};
  std::vector<IterationRecord> log;
};

struct LocalSearchResult {
  Schedule schedule;
  RunStats stats;
  bool certified = false;    // proven k_max-swap optimal (naive / derandomized only)
  bool cap_reached = false;
};

struct LocalSearchOptions {
  std::optional<std::uint64_t> iteration_cap;
  std::optional<Schedule> start;  // replaces the LPT start
  bool record_log = false;
  /// Called with the schedule before each applied move.
  std::function<void(const Schedule&, const SwapMove&)> on_move;
};

/// Machines other than the critical ones, by ascending load then index.
inline std::vector<MachineId> non_critical_by_load(const Schedule& s) {
  const Weight top = s.makespan();
  std::vector<MachineId> out;
  for (std::size_t i = 0; i < s.machines(); ++i)
    if (s.load(static_cast<MachineId>(i)) < top) out.push_back(static_cast<MachineId>(i));
  std::stable_sort(out.begin(), out.end(), [&](MachineId a, MachineId b) { return s.load(a) < s.load(b); });
  return out;
}

/// First-improvement descent from LPT (or options.start). Pairs are scanned
/// from each critical machine (ascending index) to the non-critical machines
/// in ascending load order; the first move found is applied.
inline LocalSearchResult local_search(const Instance& inst, const OperatorConfig& op, std::uint64_t seed,
                                      const LocalSearchOptions& options = {}) {
  check_k(op.k_max);
  using clock = std::chrono::steady_clock;
  const auto wall_start = clock::now();

  LocalSearchResult result{options.start ? *options.start : lpt_schedule(inst), {}, false, false};
  if (result.schedule.machines() != inst.machines()) throw InvalidInput("start schedule has wrong machine count");
  Schedule& s = result.schedule;
  RunStats& stats = result.stats;
  std::mt19937_64 rng(seed);
  const std::uint64_t batches = op.retry_batches != 0 ? op.retry_batches : default_retry_batches(inst.jobs());
  const std::vector<std::uint64_t> ranks = options.record_log ? job_ranks(inst) : std::vector<std::uint64_t>{};

  auto invoke = [&](MachinePair pair) -> std::optional<SwapMove> {
    const std::uint64_t attempts = op.kind == OperatorKind::randomized ? batches : 1;
    for (std::uint64_t a = 0; a < attempts; ++a) {
      const auto t0 = clock::now();
      SearchResult r;
      switch (op.kind) {
        case OperatorKind::naive: r = naive_search(inst, s, pair, op.k_max); break;
        case OperatorKind::randomized: r = randomized_search(inst, s, pair, op.k_max, rng); break;
        case OperatorKind::derandomized: r = derandomized_search(inst, s, pair, op.k_max); break;
      }
      stats.search_time += clock::now() - t0;
      ++stats.operator_invocations;
      stats.repetitions_used += r.repetitions;
      stats.subsets_enumerated += r.subsets_enumerated;
      if (r.move) return std::move(r.move);
    }
    return std::nullopt;
  };

  bool exhausted = false;
  while (!exhausted) {
    if (options.iteration_cap && stats.improving_iterations >= *options.iteration_cap) {
      result.cap_reached = true;
      break;
    }
    std::optional<SwapMove> move;
    const LoadSummary before = s.summary();
    for (MachineId crit : before.critical) {
      for (MachineId other : non_critical_by_load(s)) {
        move = invoke({crit, other});
        if (move) break;
      }
      if (move) break;
    }
    if (!move) {
      exhausted = true;
      break;
    }
    if (!is_improving(inst, s, *move)) throw std::logic_error("operator returned a non-improving move");
    if (options.on_move) options.on_move(s, *move);

    IterationRecord rec;
    if (options.record_log) {
      rec.move_size = move->size();
      rec.gain = move->gain;
      rec.src = move->src;
      rec.dst = move->dst;
      rec.delta_before = before.delta;
      rec.makespan_before = before.l_max;
      rec.phi_before = phi(ranks, s, move->src);
    }
    apply_move(inst, s, *move);
    ++stats.improving_iterations;
    if (options.record_log) {
      const LoadSummary after = s.summary();
      rec.delta_after = after.delta;
      rec.makespan_after = after.l_max;
      rec.phi_after = phi(ranks, s, rec.src);
      rec.critical_after = after.critical.front();
      rec.src_still_critical = s.load(rec.src) == after.l_max;
      stats.log.push_back(rec);
    }
  }

  result.certified = exhausted && op.kind != OperatorKind::randomized;
  stats.wall_time = clock::now() - wall_start;

  if (inst.machines() == 2 && op.k_max == 2 && op.kind != OperatorKind::randomized) {
    const auto n = static_cast<std::uint64_t>(inst.jobs());
    if (stats.improving_iterations > n * n * n * n)
      throw std::logic_error("2-swap descent exceeded n^4 improving iterations");
  }
  return result;
}

}  // namespace kswap
