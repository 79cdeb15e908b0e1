#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kswap {

/// Exact processing-time / load arithmetic. Every processing time is below
/// 2^126 and every instance total fits in kMaxTotal, so loads, gains and
/// load differences never overflow.
using Weight = __int128;

using JobId = std::uint32_t;
using MachineId = std::uint32_t;

inline constexpr Weight kWeightMax = static_cast<Weight>((static_cast<unsigned __int128>(1) << 127) - 1);
inline constexpr Weight kMaxProcessingTime = static_cast<Weight>(1) << 126;  // exclusive
inline constexpr Weight kMaxTotal = static_cast<Weight>(1) << 126;           // exclusive

/// Largest k accepted by the neighborhood operators. Sum-table entries hold
/// at most ceil(k/2) job ids inline.
inline constexpr int kMaxK = 16;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by oracles when a request exceeds their enumeration guard.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Weight pow2(int e) { return static_cast<Weight>(1) << e; }

inline std::string to_string(Weight v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

/// Parses an optionally signed decimal integer into a Weight. Returns false
/// on empty input, stray characters or overflow.
inline bool parse_weight(std::string_view text, Weight& out) {
  if (text.empty()) return false;
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
    if (text.size() == 1) return false;
  }
  unsigned __int128 acc = 0;
  const unsigned __int128 limit = static_cast<unsigned __int128>(kWeightMax) + (neg ? 1 : 0);
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    const unsigned digit = static_cast<unsigned>(c - '0');
    if (acc > (limit - digit) / 10) return false;
    acc = acc * 10 + digit;
  }
  out = neg ? static_cast<Weight>(-(acc - 1)) - 1 : static_cast<Weight>(acc);
  return true;
}

/// Checked addition; throws InvalidInput when the result leaves the Weight range.
inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidInput("integer overflow in 128-bit arithmetic");
  return r;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidInput("integer overflow in 128-bit arithmetic");
  return r;
}

}  // namespace kswap
