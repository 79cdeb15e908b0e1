#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kswap/types.hpp"

namespace kswap {

/// Fixed-capacity job set used by sum-table entries (at most kMaxK/2 ids).
struct JobSet {
  static constexpr std::size_t kCapacity = kMaxK / 2;

  std::array<JobId, kCapacity> ids{};
  std::uint8_t count = 0;

  [[nodiscard]] std::span<const JobId> view() const noexcept { return {ids.data(), count}; }
  [[nodiscard]] std::size_t size() const noexcept { return count; }
  [[nodiscard]] bool empty() const noexcept { return count == 0; }

  friend bool operator==(const JobSet& a, const JobSet& b) {
    if (a.count != b.count) return false;
    for (std::size_t i = 0; i < a.count; ++i)
      if (a.ids[i] != b.ids[i]) return false;
    return true;
  }
};

/// Visits every `size`-subset of `items` in lexicographic order of positions,
/// passing the running sum of `value(item)` and the chosen items. The visitor
/// returns true to stop early. Returns the number of subsets visited.
template <class T, class ValueFn, class Visitor>
std::uint64_t for_each_combination(std::span<const T> items, std::size_t size, ValueFn&& value, Visitor&& visit) {
  if (size > items.size()) return 0;
  std::vector<T> chosen(size);
  std::uint64_t visited = 0;
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t start, std::size_t depth, Weight sum) -> void {
    if (depth == size) {
      ++visited;
      stop = visit(sum, std::span<const T>(chosen));
      return;
    }
    // Leave room for the remaining slots.
    const std::size_t last = items.size() - (size - depth);
    for (std::size_t i = start; i <= last && !stop; ++i) {
      chosen[depth] = items[i];
      self(self, i + 1, depth + 1, sum + value(items[i]));
    }
  };
  recurse(recurse, 0, 0, Weight{0});
  return visited;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace kswap
