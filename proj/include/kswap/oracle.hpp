#pragma once

// Brute-force references for tests and verification. Nothing here calls into
// the search code; enumeration is by plain bitmasks.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "kswap/core.hpp"

namespace kswap::oracle {

inline constexpr std::size_t kMaxImprovingJobs = 20;
inline constexpr std::size_t kMaxKSumElements = 24;
inline constexpr std::size_t kMaxOptimumJobs = 24;

struct Verdict {
  bool exists = false;
  std::optional<SwapMove> witness;
  std::vector<std::size_t> indices;  // k-sum witness
  std::uint64_t enumerated = 0;
};

enum class SizeMode { at_most, exact };

/// Scans every (critical machine, lighter machine) pair and every job subset
/// of the pair of size <= k_max (or == k_max) for 0 < gain < L_src - L_dst.
/// The witness is the first hit in (pair, mask) order.
inline Verdict improving(const Instance& inst, const Schedule& s, int k_max, SizeMode mode = SizeMode::at_most) {
  if (inst.jobs() > kMaxImprovingJobs) throw GuardExceeded("oracle limited to 20 jobs");
  if (k_max < 1) throw InvalidInput("k_max must be positive");
  Verdict v;

  std::vector<Weight> loads(inst.machines(), 0);
  for (std::size_t j = 0; j < inst.jobs(); ++j) loads[s.machine_of(static_cast<JobId>(j))] += inst.p(static_cast<JobId>(j));
  Weight top = loads[0];
  for (Weight l : loads) top = l > top ? l : top;

  for (std::size_t src = 0; src < loads.size(); ++src) {
    if (loads[src] != top) continue;
    for (std::size_t dst = 0; dst < loads.size(); ++dst) {
      if (dst == src || loads[dst] >= loads[src]) continue;
      const Weight gap = loads[src] - loads[dst];
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < inst.jobs(); ++j) {
        const auto mi = s.machine_of(static_cast<JobId>(j));
        if (mi == src || mi == dst) members.push_back(j);
      }
      const std::uint64_t limit = std::uint64_t{1} << members.size();
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        const int bits = std::popcount(mask);
        if (bits > k_max || (mode == SizeMode::exact && bits != k_max)) continue;
        ++v.enumerated;
        Weight gain = 0;
        for (std::size_t b = 0; b < members.size(); ++b) {
          if (!((mask >> b) & 1u)) continue;
          const auto j = static_cast<JobId>(members[b]);
          gain += s.machine_of(j) == src ? inst.p(j) : -inst.p(j);
        }
        if (gain > 0 && gain < gap) {
          v.exists = true;
          if (!v.witness) {
            SwapMove mv{static_cast<MachineId>(src), static_cast<MachineId>(dst), {}, {}, gain};
            for (std::size_t b = 0; b < members.size(); ++b) {
              if (!((mask >> b) & 1u)) continue;
              const auto j = static_cast<JobId>(members[b]);
              (s.machine_of(j) == src ? mv.out_jobs : mv.in_jobs).push_back(j);
            }
            v.witness = std::move(mv);
          }
          return v;
        }
      }
    }
  }
  return v;
}

/// Recomputes loads and gain from scratch: true iff `mv` is well formed and
/// 0 < gain < L_src - L_dst on `s`.
inline bool move_is_improving(const Instance& inst, const Schedule& s, const SwapMove& mv) {
  if (mv.src == mv.dst || mv.src >= inst.machines() || mv.dst >= inst.machines()) return false;
  if (mv.out_jobs.empty() && mv.in_jobs.empty()) return false;
  std::vector<int> used(inst.jobs(), 0);
  Weight gain = 0;
  for (JobId j : mv.out_jobs) {
    if (j >= inst.jobs() || s.machine_of(j) != mv.src || used[j]++) return false;
    gain += inst.p(j);
  }
  for (JobId j : mv.in_jobs) {
    if (j >= inst.jobs() || s.machine_of(j) != mv.dst || used[j]++) return false;
    gain -= inst.p(j);
  }
  if (gain != mv.gain) return false;
  Weight l_src = 0, l_dst = 0;
  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    const auto mi = s.machine_of(static_cast<JobId>(j));
    if (mi == mv.src) l_src += inst.p(static_cast<JobId>(j));
    if (mi == mv.dst) l_dst += inst.p(static_cast<JobId>(j));
  }
  return gain > 0 && gain < l_src - l_dst;
}

/// Are there exactly k distinct indices whose values sum to zero?
inline Verdict ksum(const std::vector<std::int64_t>& values, int k) {
  if (values.size() > kMaxKSumElements) throw GuardExceeded("k-sum oracle limited to 24 elements");
  if (k < 1) throw InvalidInput("k must be positive");
  Verdict v;
  const std::uint64_t limit = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (std::popcount(mask) != k) continue;
    ++v.enumerated;
    Weight sum = 0;
    for (std::size_t b = 0; b < values.size(); ++b)
      if ((mask >> b) & 1u) sum += values[b];
    if (sum == 0) {
      v.exists = true;
      for (std::size_t b = 0; b < values.size(); ++b)
        if ((mask >> b) & 1u) v.indices.push_back(b);
      return v;
    }
  }
  return v;
}

/// Minimum makespan on two machines by enumerating every 2-partition
/// (job 0 pinned to machine 0).
inline Weight optimum_two_machines(const Instance& inst) {
  if (inst.machines() != 2) throw InvalidInput("exact optimum only for two machines");
  if (inst.jobs() > kMaxOptimumJobs) throw GuardExceeded("exact optimum limited to 24 jobs");
  const std::size_t rest = inst.jobs() - 1;
  const Weight total = inst.total();
  Weight best = total;
  // Gray-code walk over subsets of jobs 1..n-1 placed with job 0.
  Weight with_first = inst.p(0);
  std::uint64_t gray = 0;
  const std::uint64_t limit = std::uint64_t{1} << rest;
  for (std::uint64_t i = 0; i < limit; ++i) {
    if (i != 0) {
      const int flip = std::countr_zero(i);
      const auto job = static_cast<JobId>(flip + 1);
      gray ^= std::uint64_t{1} << flip;
      with_first += ((gray >> flip) & 1u) ? inst.p(job) : -inst.p(job);
    }
    const Weight other = total - with_first;
    const Weight span = with_first > other ? with_first : other;
    if (span < best) best = span;
  }
  return best;
}

}  // namespace kswap::oracle
