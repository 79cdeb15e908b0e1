#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "kswap/core.hpp"

namespace kswap {

inline constexpr std::uint64_t kDefaultLo = 1;
inline constexpr std::uint64_t kDefaultHi = 1'000'000'000;

/// n i.i.d. uniform integer processing times in [lo, hi].
inline Instance gen_uniform(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t lo = kDefaultLo,
                            std::uint64_t hi = kDefaultHi) {
  if (lo < 1 || lo > hi) throw InvalidInput("processing-time range must satisfy 1 <= lo <= hi");
  if (n < 1) throw InvalidInput("need at least one job");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  std::vector<Weight> p(n);
  for (auto& v : p) v = static_cast<Weight>(dist(rng));
  return {m, std::move(p)};
}

// ---------------------------------------------------------------------------
// Exponential lower-bound family for exact 3-swaps.
//
// Jobs a_i, b_i, c_i (i = 1..n) and one huge job l:
//   p(a_i) = 2^(n+i+1) + 2^(i-1),  p(b_i) = 2^(n+i),  p(c_i) = 2^(n+i-1) + 2^(i-1),
//   p(l)   = 2^(2n+4) > sum of all other jobs.
// Job ids: a_i = 3(i-1), b_i = 3(i-1)+1, c_i = 3(i-1)+2, l = 3n.
// Machine 0 starts with every a_i and l, machine 1 with every b_i and c_i.
// ---------------------------------------------------------------------------

inline constexpr int kMaxLowerBoundN = 60;

struct LowerBoundInstance {
  int n = 0;
  Instance instance;
  Schedule initial;
  std::vector<JobId> a, b, c;  // index i-1
  JobId ell = 0;
};

inline LowerBoundInstance gen_lowerbound(int n) {
  if (n < 1 || n > kMaxLowerBoundN) throw InvalidInput("lower-bound family needs 1 <= n <= 60");
  std::vector<Weight> p(3 * static_cast<std::size_t>(n) + 1);
  std::vector<MachineId> assignment(p.size());
  std::vector<JobId> a, b, c;
  for (int i = 1; i <= n; ++i) {
    const auto base = static_cast<JobId>(3 * (i - 1));
    a.push_back(base);
    b.push_back(base + 1);
    c.push_back(base + 2);
    p[base] = pow2(n + i + 1) + pow2(i - 1);
    p[base + 1] = pow2(n + i);
    p[base + 2] = pow2(n + i - 1) + pow2(i - 1);
    assignment[base] = 0;
    assignment[base + 1] = 1;
    assignment[base + 2] = 1;
  }
  const auto ell = static_cast<JobId>(3 * n);
  p[ell] = pow2(2 * n + 4);
  assignment[ell] = 0;
  Instance inst(2, std::move(p));
  Schedule initial(inst, std::move(assignment));
  return {n, std::move(inst), std::move(initial), std::move(a), std::move(b), std::move(c), ell};
}

/// Per-triple configuration: 0 when a_i is on machine 0 and b_i, c_i on
/// machine 1; 1 for the reverse; -1 otherwise.
inline std::vector<int> omega_state(const LowerBoundInstance& lb, const Schedule& s) {
  std::vector<int> w(static_cast<std::size_t>(lb.n));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const MachineId ma = s.machine_of(lb.a[i]), mb = s.machine_of(lb.b[i]), mc = s.machine_of(lb.c[i]);
    if (ma == 0 && mb == 1 && mc == 1)
      w[i] = 0;
    else if (ma == 1 && mb == 0 && mc == 0)
      w[i] = 1;
    else
      w[i] = -1;
  }
  return w;
}

/// Replays the binary-counter sequence of improving 3-swaps from the initial
/// schedule, calling visit(move, schedule_after) for each. Raises
/// std::logic_error if a planned move is not improving or machine 0 stops
/// being critical. Returns the number of moves.
inline std::uint64_t for_each_adversarial_move(const LowerBoundInstance& lb,
                                               const std::function<void(const SwapMove&, const Schedule&)>& visit) {
  if (lb.n > 62) throw InvalidInput("counter too wide");
  const Instance& inst = lb.instance;
  Schedule s = lb.initial;
  constexpr MachinePair pair{0, 1};
  std::uint64_t count = 0;

  auto play = [&](std::vector<JobId> out, std::vector<JobId> in) {
    const SwapMove mv = make_move(inst, pair, std::move(out), std::move(in));
    if (!is_improving(inst, s, mv)) throw std::logic_error("planned 3-swap is not improving");
    apply_move(inst, s, mv);
    if (s.load(0) <= s.load(1)) throw std::logic_error("machine 0 is no longer critical");
    ++count;
    visit(mv, s);
  };
  auto A = [&](int i) { return lb.a[static_cast<std::size_t>(i - 1)]; };
  auto B = [&](int i) { return lb.b[static_cast<std::size_t>(i - 1)]; };
  auto C = [&](int i) { return lb.c[static_cast<std::size_t>(i - 1)]; };

  // Counter value v has bit i-1 set iff omega_i = 1. Incrementing from
  // 2^(j-1) - 1 (low j-1 bits set, bit j-1 clear) clears the prefix and sets omega_j.
  const std::uint64_t last = (std::uint64_t{1} << lb.n) - 1;
  for (std::uint64_t v = 0; v < last; ++v) {
    const int j = std::countr_one(v) + 1;
    if (j == 1) {
      play({A(1)}, {B(1), C(1)});
      continue;
    }
    play({A(j)}, {A(j - 1), B(j)});
    for (int k = j - 2; k >= 1; --k) play({B(k), C(k + 1)}, {A(k)});
    play({B(j - 1), C(1)}, {C(j)});
  }
  return count;
}

inline constexpr int kMaxMaterializedSequenceN = 20;

inline std::vector<SwapMove> adversarial_sequence(const LowerBoundInstance& lb) {
  if (lb.n > kMaxMaterializedSequenceN) throw InvalidInput("sequence too long to materialize; stream it instead");
  std::vector<SwapMove> moves;
  for_each_adversarial_move(lb, [&](const SwapMove& mv, const Schedule&) { moves.push_back(mv); });
  return moves;
}

// ---------------------------------------------------------------------------
// k-sum reduction. For S with sum >= 0 (negated otherwise), |S| = N,
// T = sum |a_j|:
//   machine 0: N*a_j + 1 for each a_j >= 0, k-1 jobs of 3NT, one of 3NT + 1
//   machine 1: -N*a_j for each a_j < 0, one job of N*(sum S + 3kT)
// so that L_0 - L_1 = theta + 1 with theta = #{a_j >= 0}. Job j < N stands
// for element j.
// ---------------------------------------------------------------------------

struct KSumInstance {
  std::vector<std::int64_t> values;  // after the optional negation
  bool negated = false;
  int k = 0;
  Instance instance;
  Schedule schedule;
  std::uint64_t theta = 0;
};

inline KSumInstance gen_ksum_reduction(std::vector<std::int64_t> values, int k) {
  if (values.empty()) throw InvalidInput("k-sum set is empty");
  if (k < 1) throw InvalidInput("k must be positive");
  Weight sum = 0, abs_sum = 0;
  for (std::int64_t v : values) {
    sum = checked_add(sum, v);
    abs_sum = checked_add(abs_sum, v < 0 ? -static_cast<Weight>(v) : static_cast<Weight>(v));
  }
  if (abs_sum == 0) throw InvalidInput("k-sum set of only zeros is not supported by the reduction");
  const bool negated = sum < 0;
  if (negated) {
    for (auto& v : values) {
      if (v == INT64_MIN) throw InvalidInput("value cannot be negated");
      v = -v;
    }
    sum = -sum;
  }

  const Weight n = static_cast<Weight>(values.size());
  const Weight big = checked_mul(checked_mul(3, n), abs_sum);
  std::vector<Weight> p;
  std::vector<MachineId> assignment;
  std::uint64_t theta = 0;
  for (std::int64_t v : values) {
    if (v >= 0) {
      p.push_back(checked_add(checked_mul(n, v), 1));
      assignment.push_back(0);
      ++theta;
    } else {
      p.push_back(checked_mul(n, -static_cast<Weight>(v)));
      assignment.push_back(1);
    }
  }
  for (int i = 0; i < k - 1; ++i) {
    p.push_back(big);
    assignment.push_back(0);
  }
  p.push_back(checked_add(big, 1));
  assignment.push_back(0);
  p.push_back(checked_mul(n, checked_add(sum, checked_mul(checked_mul(3, k), abs_sum))));
  assignment.push_back(1);

  Weight total = 0;
  for (Weight v : p) total = checked_add(total, v);
  if (total >= kMaxTotal) throw InvalidInput("k-sum values too large for 128-bit loads");

  Instance inst(2, std::move(p));
  Schedule sched(inst, std::move(assignment));
  return {std::move(values), negated, k, std::move(inst), std::move(sched), theta};
}

}  // namespace kswap
