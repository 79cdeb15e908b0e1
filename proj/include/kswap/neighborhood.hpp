#pragma once

// Improving k-swap search on one machine pair.
//
// A k-swap exchanges k' jobs of the loaded machine `src` with k'' jobs of
// `dst` (k' + k'' <= k). It is improving iff its gain lies strictly inside
// (0, L_src - L_dst). Three searches are provided:
//
//   naive_search       exhaustive, increasing move size, lexicographic order
//   mim_single_run     one meet-in-the-middle pass over a fixed A/B partition
//   randomized_search  mim_single_run over fresh uniform partitions,
//                      gamma(k) repetitions per exact size k = 1..k_max
//
// Every returned move satisfies is_improving.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "kswap/core.hpp"
#include "kswap/subsets.hpp"

namespace kswap {

/// Signed subset sum: jobs on src count positive, jobs on dst negative.
struct SumEntry {
  Weight value = 0;
  JobSet jobs;
};

struct Partition {
  std::vector<JobId> a_side;
  std::vector<JobId> b_side;
};

struct SearchResult {
  std::optional<SwapMove> move;
  std::uint64_t subsets_enumerated = 0;
  std::uint64_t repetitions = 0;  // single meet-in-the-middle runs

  [[nodiscard]] bool found() const noexcept { return move.has_value(); }
};

inline void check_pair(const Schedule& s, MachinePair pair) {
  if (pair.src >= s.machines() || pair.dst >= s.machines() || pair.src == pair.dst)
    throw InvalidInput("invalid machine pair");
}

inline void check_k(int k) {
  if (k < 1 || k > kMaxK) throw InvalidInput("k must lie in [1, " + std::to_string(kMaxK) + "]");
}

/// Ascending ids of the jobs on either machine of the pair.
inline std::vector<JobId> pair_jobs(const Schedule& s, MachinePair pair) {
  std::vector<JobId> out;
  const auto assignment = s.assignment();
  for (std::size_t j = 0; j < assignment.size(); ++j)
    if (assignment[j] == pair.src || assignment[j] == pair.dst) out.push_back(static_cast<JobId>(j));
  return out;
}

inline Weight pair_delta(const Schedule& s, MachinePair pair) { return s.load(pair.src) - s.load(pair.dst); }

namespace detail {

inline Weight signed_p(const Instance& inst, const Schedule& s, MachinePair pair, JobId j) {
  return s.machine_of(j) == pair.src ? inst.p(j) : -inst.p(j);
}

inline void require_on_pair(const Instance& inst, const Schedule& s, MachinePair pair, std::span<const JobId> jobs) {
  for (JobId j : jobs) {
    if (j >= inst.jobs()) throw InvalidInput("job " + std::to_string(j) + " out of range");
    const MachineId mi = s.machine_of(j);
    if (mi != pair.src && mi != pair.dst)
      throw InvalidInput("job " + std::to_string(j) + " is not on the machine pair");
  }
}

/// Splits a job union by current machine into a move over `pair`.
inline SwapMove assemble_move(const Instance& inst, const Schedule& s, MachinePair pair,
                              std::span<const JobId> first, std::span<const JobId> second) {
  std::vector<JobId> out, in;
  for (auto part : {first, second})
    for (JobId j : part) (s.machine_of(j) == pair.src ? out : in).push_back(j);
  return make_move(inst, pair, std::move(out), std::move(in));
}

}  // namespace detail

inline Weight signed_sum(const Instance& inst, const Schedule& s, MachinePair pair, std::span<const JobId> jobs) {
  check_pair(s, pair);
  detail::require_on_pair(inst, s, pair, jobs);
  Weight v = 0;
  for (JobId j : jobs) v += detail::signed_p(inst, s, pair, j);
  return v;
}

/// One entry per `subset_size`-subset of `side_jobs`, in lexicographic order.
inline std::vector<SumEntry> build_sum_table(const Instance& inst, const Schedule& s, MachinePair pair,
                                             std::span<const JobId> side_jobs, std::size_t subset_size) {
  check_pair(s, pair);
  detail::require_on_pair(inst, s, pair, side_jobs);
  if (subset_size > JobSet::kCapacity) throw InvalidInput("subset size exceeds sum-table capacity");
  std::vector<SumEntry> table;
  if (subset_size > side_jobs.size()) return table;
  table.reserve(binomial(side_jobs.size(), subset_size));
  for_each_combination<JobId>(
      side_jobs, subset_size, [&](JobId j) { return detail::signed_p(inst, s, pair, j); },
      [&](Weight sum, std::span<const JobId> chosen) {
        SumEntry e;
        e.value = sum;
        e.jobs.count = static_cast<std::uint8_t>(chosen.size());
        std::copy(chosen.begin(), chosen.end(), e.jobs.ids.begin());
        table.push_back(e);
        return false;
      });
  return table;
}

inline void sort_by_value(std::vector<SumEntry>& table) {
  std::stable_sort(table.begin(), table.end(), [](const SumEntry& a, const SumEntry& b) { return a.value < b.value; });
}

/// Index of an entry with value in the open window (-x, delta - x), found by
/// binary search over `sorted` (non-decreasing by value).
inline std::optional<std::size_t> window_query(std::span<const SumEntry> sorted, Weight x, Weight delta) {
  const Weight lo = -x;
  const Weight hi = delta - x;
  auto it = std::upper_bound(sorted.begin(), sorted.end(), lo,
                             [](Weight v, const SumEntry& e) { return v < e.value; });
  if (it == sorted.end() || it->value >= hi) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Exact-k meet-in-the-middle pass: ceil(k/2)-subsets of the A side against
/// floor(k/2)-subsets of the B side.
inline SearchResult mim_single_run(const Instance& inst, const Schedule& s, MachinePair pair, int k,
                                   const Partition& partition) {
  check_pair(s, pair);
  check_k(k);
  SearchResult result;
  result.repetitions = 1;
  const Weight delta = pair_delta(s, pair);
  if (delta <= 1) return result;  // no integer strictly inside (0, delta)

  const auto a_size = static_cast<std::size_t>((k + 1) / 2);
  const auto b_size = static_cast<std::size_t>(k / 2);
  if (partition.a_side.size() < a_size || partition.b_side.size() < b_size) return result;

  auto b_table = build_sum_table(inst, s, pair, partition.b_side, b_size);
  result.subsets_enumerated += b_table.size();
  sort_by_value(b_table);

  detail::require_on_pair(inst, s, pair, partition.a_side);
  std::vector<Weight> signed_values(inst.jobs(), 0);
  std::vector<char> in_a(inst.jobs(), 0);
  for (JobId j : partition.a_side) {
    signed_values[j] = detail::signed_p(inst, s, pair, j);
    in_a[j] = 1;
  }
  for (JobId j : partition.b_side)
    if (in_a[j]) throw InvalidInput("partition sides overlap at job " + std::to_string(j));
  std::vector<JobId> hit_a;
  std::optional<std::size_t> hit_b;
  result.subsets_enumerated += for_each_combination<JobId>(
      partition.a_side, a_size, [&](JobId j) { return signed_values[j]; },
      [&](Weight x, std::span<const JobId> chosen) {
        hit_b = window_query(b_table, x, delta);
        if (hit_b) hit_a.assign(chosen.begin(), chosen.end());
        return hit_b.has_value();
      });
  if (hit_b) result.move = detail::assemble_move(inst, s, pair, hit_a, b_table[*hit_b].jobs.view());
  return result;
}

/// Repetitions that push the single-run failure probability below 1/e:
/// ceil(2^k / C(k, ceil(k/2))).
inline std::uint64_t gamma(int k) {
  if (k < 1 || k > 62) throw InvalidInput("gamma requires 1 <= k <= 62");
  const std::uint64_t num = std::uint64_t{1} << k;
  const std::uint64_t den = binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>((k + 1) / 2));
  return (num + den - 1) / den;
}

/// Uniform A/B split of the pair's jobs, one random bit per job in ascending id order.
template <class Rng>
Partition random_partition(const Schedule& s, MachinePair pair, Rng& rng) {
  Partition part;
  for (JobId j : pair_jobs(s, pair)) ((rng() & 1u) ? part.b_side : part.a_side).push_back(j);
  return part;
}

/// One batch: for k = 1..k_max, gamma(k) fresh partitions each. First hit wins.
template <class Rng>
SearchResult randomized_search(const Instance& inst, const Schedule& s, MachinePair pair, int k_max, Rng& rng) {
  check_pair(s, pair);
  check_k(k_max);
  SearchResult total;
  if (pair_delta(s, pair) <= 1) return total;
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t reps = gamma(k);
    for (std::uint64_t r = 0; r < reps; ++r) {
      const Partition part = random_partition(s, pair, rng);
      SearchResult run = mim_single_run(inst, s, pair, k, part);
      total.subsets_enumerated += run.subsets_enumerated;
      total.repetitions += run.repetitions;
      if (run.move) {
        total.move = std::move(run.move);
        return total;
      }
    }
  }
  return total;
}

/// Exhaustive scan: every subset of the pair's jobs of total size 1..k_max,
/// increasing size, lexicographic by job id within a size.
inline SearchResult naive_search(const Instance& inst, const Schedule& s, MachinePair pair, int k_max) {
  check_pair(s, pair);
  check_k(k_max);
  SearchResult result;
  const Weight delta = pair_delta(s, pair);
  if (delta <= 1) return result;
  const std::vector<JobId> jobs = pair_jobs(s, pair);
  std::vector<Weight> signed_values(inst.jobs(), 0);
  for (JobId j : jobs) signed_values[j] = detail::signed_p(inst, s, pair, j);

  for (int size = 1; size <= k_max && !result.move; ++size) {
    result.subsets_enumerated += for_each_combination<JobId>(
        jobs, static_cast<std::size_t>(size), [&](JobId j) { return signed_values[j]; },
        [&](Weight gain, std::span<const JobId> chosen) {
          if (gain <= 0 || gain >= delta) return false;
          result.move = detail::assemble_move(inst, s, pair, chosen, {});
          return true;
        });
  }
  return result;
}

}  // namespace kswap
