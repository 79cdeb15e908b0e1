#pragma once

// Deterministic replacement for the random A/B partition.
//
// A splitter family hashes job ids into k^2 buckets so that every k-subset is
// bucketed injectively by at least one member. A mapping schedule then walks
// bucket colorings from "first half 0" to its complement one coordinate at a
// time, so any injectively bucketed k-subset gets exactly ceil(k/2) zeros under
// some coloring. Trying every (function, coloring) pair therefore covers every
// exact-k swap, making the meet-in-the-middle search complete.

#include <cstdint>
#include <set>
#include <vector>

#include "kswap/neighborhood.hpp"

namespace kswap {

/// Hash family [0, n) -> [0, k^2). With a modulus of 0 the single member is
/// the identity (only used when n <= k^2); otherwise member i maps
/// x -> ((i + 1) * x mod q) mod k^2 for the smallest prime q > n.
class SplitterFamily {
 public:
  SplitterFamily(std::uint64_t n, std::uint64_t k, std::uint64_t modulus)
      : n_(n), k_(k), buckets_(k * k), q_(modulus) {}

  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t k() const noexcept { return k_; }
  [[nodiscard]] std::uint64_t buckets() const noexcept { return buckets_; }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return q_; }
  [[nodiscard]] std::size_t size() const noexcept { return q_ == 0 ? 1 : static_cast<std::size_t>(q_ - 1); }

  [[nodiscard]] std::uint64_t bucket(std::size_t function, std::uint64_t x) const {
    if (q_ == 0) return x;
    const std::uint64_t a = function + 1;
    return ((a * x) % q_) % buckets_;
  }

  /// Materialized member `function` over [0, n).
  [[nodiscard]] std::vector<std::uint64_t> table(std::size_t function) const {
    std::vector<std::uint64_t> out(n_);
    for (std::uint64_t x = 0; x < n_; ++x) out[x] = bucket(function, x);
    return out;
  }

 private:
  std::uint64_t n_;
  std::uint64_t k_;
  std::uint64_t buckets_;
  std::uint64_t q_;
};

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline SplitterFamily build_splitter(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1) throw InvalidInput("splitter needs n >= 1 and k >= 1");
  if (n > (std::uint64_t{1} << 31) || k > (std::uint64_t{1} << 15))
    throw InvalidInput("splitter parameters too large");
  if (n <= k * k) return {n, k, 0};
  std::uint64_t q = n + 1;
  while (!is_prime(q)) ++q;
  return {n, k, q};
}

/// Bucket colorings; 0 sends a bucket to the A side.
struct MappingSchedule {
  std::uint64_t k = 0;
  std::vector<std::vector<std::uint8_t>> mappings;
};

/// Starts with buckets [0, ceil(k^2/2)) colored 0 and the rest 1, then
/// alternately recolors the next right-half bucket to 0 and the next
/// left-half bucket to 1 until the complement is reached (k^2 + 1 mappings).
/// For odd k^2 the left half is one longer; its last bucket flips after the
/// right half is exhausted.
inline MappingSchedule mapping_schedule(std::uint64_t k) {
  if (k < 1 || k > 64) throw InvalidInput("mapping schedule needs 1 <= k <= 64");
  const std::size_t buckets = static_cast<std::size_t>(k * k);
  const std::size_t half = (buckets + 1) / 2;
  MappingSchedule out{k, {}};
  std::vector<std::uint8_t> current(buckets, 1);
  std::fill(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(half), 0);
  out.mappings.push_back(current);

  std::size_t next_right = half;  // next bucket to recolor 0
  std::size_t next_left = 0;      // next bucket to recolor 1
  bool right_turn = true;
  while (next_right < buckets || next_left < half) {
    const bool take_right = next_right < buckets && (right_turn || next_left >= half);
    if (take_right)
      current[next_right++] = 0;
    else
      current[next_left++] = 1;
    right_turn = !take_right;
    out.mappings.push_back(current);
  }
  return out;
}

/// Deterministic exact-k search: every splitter member combined with every
/// coloring of the schedule. Identical partitions are run once.
inline SearchResult derandomized_search_exact(const Instance& inst, const Schedule& s, MachinePair pair, int k) {
  check_pair(s, pair);
  check_k(k);
  SearchResult total;
  if (pair_delta(s, pair) <= 1) return total;

  const auto family = build_splitter(inst.jobs(), static_cast<std::uint64_t>(k));
  const auto colorings = mapping_schedule(static_cast<std::uint64_t>(k));
  const std::vector<JobId> jobs = pair_jobs(s, pair);
  std::set<std::vector<bool>> seen;
  std::vector<std::uint64_t> bucket_of(jobs.size());

  for (std::size_t f = 0; f < family.size(); ++f) {
    for (std::size_t i = 0; i < jobs.size(); ++i) bucket_of[i] = family.bucket(f, jobs[i]);
    for (const auto& coloring : colorings.mappings) {
      std::vector<bool> in_b(jobs.size());
      for (std::size_t i = 0; i < jobs.size(); ++i) in_b[i] = coloring[bucket_of[i]] != 0;
      if (!seen.insert(in_b).second) continue;

      Partition part;
      for (std::size_t i = 0; i < jobs.size(); ++i) (in_b[i] ? part.b_side : part.a_side).push_back(jobs[i]);
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

/// Sizes 1..k_max in ascending order; complete for moves of size <= k_max.
inline SearchResult derandomized_search(const Instance& inst, const Schedule& s, MachinePair pair, int k_max) {
  check_pair(s, pair);
  check_k(k_max);
  SearchResult total;
  for (int k = 1; k <= k_max; ++k) {
    SearchResult run = derandomized_search_exact(inst, s, pair, k);
    total.subsets_enumerated += run.subsets_enumerated;
    total.repetitions += run.repetitions;
    if (run.move) {
      total.move = std::move(run.move);
      return total;
    }
  }
  return total;
}

}  // namespace kswap
