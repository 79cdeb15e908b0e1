#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kswap/types.hpp"

namespace kswap {

/// Jobs with processing times on m identical machines. Immutable once built.
class Instance {
 public:
  Instance(std::size_t machines, std::vector<Weight> processing_times)
      : m_(machines), p_(std::move(processing_times)) {
    if (m_ < 2) throw InvalidInput("instance needs at least 2 machines");
    if (p_.empty()) throw InvalidInput("instance needs at least 1 job");
    Weight total = 0;
    for (std::size_t j = 0; j < p_.size(); ++j) {
      if (p_[j] < 0) throw InvalidInput("negative processing time for job " + std::to_string(j));
      if (p_[j] >= kMaxProcessingTime)
        throw InvalidInput("processing time of job " + std::to_string(j) + " is not below 2^126");
      total += p_[j];  // both operands < 2^126, no overflow until the check below trips
      if (total >= kMaxTotal) throw InvalidInput("total processing time is not below 2^126");
    }
    total_ = total;
  }

  [[nodiscard]] std::size_t jobs() const noexcept { return p_.size(); }
  [[nodiscard]] std::size_t machines() const noexcept { return m_; }
  [[nodiscard]] Weight p(JobId j) const { return p_.at(j); }
  [[nodiscard]] std::span<const Weight> processing_times() const noexcept { return p_; }
  [[nodiscard]] Weight total() const noexcept { return total_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t m_;
  std::vector<Weight> p_;
  Weight total_ = 0;
};

struct LoadSummary {
  Weight l_max = 0;
  Weight l_min = 0;
  Weight delta = 0;
  std::vector<MachineId> critical;  // ascending
};

inline LoadSummary summarize(std::span<const Weight> loads) {
  LoadSummary s;
  s.l_max = *std::max_element(loads.begin(), loads.end());
  s.l_min = *std::min_element(loads.begin(), loads.end());
  s.delta = s.l_max - s.l_min;
  for (std::size_t i = 0; i < loads.size(); ++i)
    if (loads[i] == s.l_max) s.critical.push_back(static_cast<MachineId>(i));
  return s;
}

struct LoadReport {
  std::vector<Weight> loads;
  LoadSummary summary;
};

inline void validate_assignment(const Instance& inst, std::span<const MachineId> assignment) {
  if (assignment.size() != inst.jobs())
    throw InvalidInput("assignment has " + std::to_string(assignment.size()) + " entries, expected " +
                       std::to_string(inst.jobs()));
  for (std::size_t j = 0; j < assignment.size(); ++j)
    if (assignment[j] >= inst.machines())
      throw InvalidInput("job " + std::to_string(j) + " assigned to machine " + std::to_string(assignment[j]) +
                         " out of range");
}

inline LoadReport compute_loads(const Instance& inst, std::span<const MachineId> assignment) {
  validate_assignment(inst, assignment);
  LoadReport r;
  r.loads.assign(inst.machines(), 0);
  for (std::size_t j = 0; j < assignment.size(); ++j) r.loads[assignment[j]] += inst.p(static_cast<JobId>(j));
  r.summary = summarize(r.loads);
  return r;
}

struct SwapMove;

/// Job-to-machine assignment with cached machine loads.
class Schedule {
 public:
  Schedule(const Instance& inst, std::vector<MachineId> assignment)
      : assignment_(std::move(assignment)), loads_(compute_loads(inst, assignment_).loads) {}

  /// Every job on `machine`.
  static Schedule all_on(const Instance& inst, MachineId machine) {
    return {inst, std::vector<MachineId>(inst.jobs(), machine)};
  }

  [[nodiscard]] std::span<const MachineId> assignment() const noexcept { return assignment_; }
  [[nodiscard]] MachineId machine_of(JobId j) const { return assignment_.at(j); }
  [[nodiscard]] std::span<const Weight> loads() const noexcept { return loads_; }
  [[nodiscard]] Weight load(MachineId i) const { return loads_.at(i); }
  [[nodiscard]] std::size_t machines() const noexcept { return loads_.size(); }
  [[nodiscard]] LoadSummary summary() const { return summarize(loads_); }
  [[nodiscard]] Weight makespan() const { return *std::max_element(loads_.begin(), loads_.end()); }

  [[nodiscard]] std::vector<JobId> jobs_on(MachineId i) const {
    std::vector<JobId> out;
    for (std::size_t j = 0; j < assignment_.size(); ++j)
      if (assignment_[j] == i) out.push_back(static_cast<JobId>(j));
    return out;
  }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  friend void apply_move(const Instance&, Schedule&, const SwapMove&);

  std::vector<MachineId> assignment_;
  std::vector<Weight> loads_;
};

/// Ordered machine pair; `src` is the loaded (critical) side.
struct MachinePair {
  MachineId src = 0;
  MachineId dst = 1;
  friend bool operator==(const MachinePair&, const MachinePair&) = default;
};

/// Moves `out_jobs` from src to dst and `in_jobs` from dst to src.
struct SwapMove {
  MachineId src = 0;
  MachineId dst = 1;
  std::vector<JobId> out_jobs;  // ascending
  std::vector<JobId> in_jobs;   // ascending
  Weight gain = 0;

  [[nodiscard]] std::size_t size() const noexcept { return out_jobs.size() + in_jobs.size(); }
  [[nodiscard]] MachinePair pair() const noexcept { return {src, dst}; }

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

inline Weight sum_of(const Instance& inst, std::span<const JobId> jobs) {
  Weight s = 0;
  for (JobId j : jobs) s += inst.p(j);
  return s;
}

/// Builds a move from two job sets, computing the gain.
inline SwapMove make_move(const Instance& inst, MachinePair pair, std::vector<JobId> out_jobs,
                          std::vector<JobId> in_jobs) {
  std::sort(out_jobs.begin(), out_jobs.end());
  std::sort(in_jobs.begin(), in_jobs.end());
  SwapMove mv{pair.src, pair.dst, std::move(out_jobs), std::move(in_jobs), 0};
  mv.gain = sum_of(inst, mv.out_jobs) - sum_of(inst, mv.in_jobs);
  return mv;
}

/// The move that undoes `mv` once it has been applied.
inline SwapMove reversed(const SwapMove& mv) {
  return {mv.dst, mv.src, mv.out_jobs, mv.in_jobs, mv.gain};
}

/// Throws InvalidInput unless `mv` is consistent with the schedule.
inline void validate_move(const Instance& inst, const Schedule& s, const SwapMove& mv) {
  if (mv.src >= s.machines() || mv.dst >= s.machines()) throw InvalidInput("move references a machine out of range");
  if (mv.src == mv.dst) throw InvalidInput("move source and destination coincide");
  if (mv.size() == 0) throw InvalidInput("move involves no jobs");
  std::vector<JobId> seen;
  seen.reserve(mv.size());
  auto check_side = [&](std::span<const JobId> jobs, MachineId expected, const char* side) {
    for (JobId j : jobs) {
      if (j >= inst.jobs()) throw InvalidInput("move references job " + std::to_string(j) + " out of range");
      if (s.machine_of(j) != expected)
        throw InvalidInput(std::string(side) + " job " + std::to_string(j) + " is not on machine " +
                           std::to_string(expected));
      seen.push_back(j);
    }
  };
  check_side(mv.out_jobs, mv.src, "outgoing");
  check_side(mv.in_jobs, mv.dst, "incoming");
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InvalidInput("move lists a job twice");
  if (mv.gain != sum_of(inst, mv.out_jobs) - sum_of(inst, mv.in_jobs))
    throw InvalidInput("move gain is inconsistent with processing times");
}

/// 0 < gain < L_src - L_dst. Strictly lowers max(L_src, L_dst) when true.
inline bool is_improving(const Instance& inst, const Schedule& s, const SwapMove& mv) {
  validate_move(inst, s, mv);
  return mv.gain > 0 && mv.gain < s.load(mv.src) - s.load(mv.dst);
}

/// Applies `mv` in place. Validation happens before any mutation.
inline void apply_move(const Instance& inst, Schedule& s, const SwapMove& mv) {
  validate_move(inst, s, mv);
  for (JobId j : mv.out_jobs) s.assignment_[j] = mv.dst;
  for (JobId j : mv.in_jobs) s.assignment_[j] = mv.src;
  s.loads_[mv.src] -= mv.gain;
  s.loads_[mv.dst] += mv.gain;
}

}  // namespace kswap
