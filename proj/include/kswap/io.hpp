#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kswap/core.hpp"

namespace kswap {

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

/// Whitespace-separated tokens, grouped by 1-based line.
inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines(1);
  std::size_t line = 1, col = 1, i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      lines.emplace_back();
      ++line;
      col = 1;
      ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
    } else {
      const std::size_t start = i, start_col = col;
      while (i < text.size() && text[i] != '\n' && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') {
        ++i;
        ++col;
      }
      lines.back().push_back({text.substr(start, i - start), line, start_col});
    }
  }
  return lines;
}

inline std::uint64_t parse_count(const Token& t, const char* what) {
  Weight v;
  if (!parse_weight(t.text, v) || t.text[0] == '+' || t.text[0] == '-')
    throw ParseError(t.line, t.column, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  if (v > static_cast<Weight>(UINT32_MAX)) throw ParseError(t.line, t.column, std::string(what) + " too large");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// Instance text format: "n m" on the first line, then n processing times on
/// the second line. Trailing blank lines are allowed, anything else is not.
inline Instance parse_instance(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  const auto& header = lines[0];
  if (header.size() != 2) {
    const std::size_t col = header.size() > 2 ? header[2].column : 1;
    throw ParseError(1, col, "expected header 'n m', got " + std::to_string(header.size()) + " fields");
  }
  const std::uint64_t n = detail::parse_count(header[0], "job count");
  const std::uint64_t m = detail::parse_count(header[1], "machine count");
  if (n < 1) throw ParseError(1, header[0].column, "job count must be positive");
  if (m < 2) throw ParseError(1, header[1].column, "machine count must be at least 2");
  if (lines.size() < 2) throw ParseError(2, 1, "expected " + std::to_string(n) + " values, got 0");
  const auto& body = lines[1];
  if (body.size() != n) {
    const std::size_t col = body.size() > n ? body[n].column : (body.empty() ? 1 : body.back().column);
    throw ParseError(2, col, "expected " + std::to_string(n) + " values, got " + std::to_string(body.size()));
  }
  std::vector<Weight> p;
  p.reserve(n);
  for (const auto& t : body) {
    Weight v;
    if (!parse_weight(t.text, v)) throw ParseError(t.line, t.column, "invalid integer '" + std::string(t.text) + "'");
    if (v < 0) throw ParseError(t.line, t.column, "negative processing time");
    if (v >= kMaxProcessingTime) throw ParseError(t.line, t.column, "processing time not below 2^126");
    p.push_back(v);
  }
  for (std::size_t l = 2; l < lines.size(); ++l)
    if (!lines[l].empty()) throw ParseError(lines[l][0].line, lines[l][0].column, "trailing content");
  try {
    return {static_cast<std::size_t>(m), std::move(p)};
  } catch (const InvalidInput& e) {
    throw ParseError(2, 1, e.what());
  }
}

inline std::string serialize_instance(const Instance& inst) {
  std::string out = std::to_string(inst.jobs()) + " " + std::to_string(inst.machines()) + "\n";
  const auto p = inst.processing_times();
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) out.push_back(' ');
    out += to_string(p[j]);
  }
  out.push_back('\n');
  return out;
}

/// One benchmark line: a local-search run of one operator at one k.
struct BenchRow {
  std::string class_label;
  std::uint64_t instance_id = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  int k = 0;
  std::string op;
  std::uint64_t seed = 0;
  std::uint64_t improving_iterations = 0;
  double avg_step_time_ms = 0;  // search time / max(1, operator invocations)
  double total_time_ms = 0;     // search time only
  Weight final_makespan = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline constexpr std::string_view kBenchHeader =
    "class,instance,n,m,k,operator,seed,improving_iterations,avg_step_time_ms,total_time_ms,final_makespan";

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchHeader << '\n';
  for (const auto& r : rows) {
    os << r.class_label << ',' << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.op << ','
       << r.seed << ',' << r.improving_iterations << ',' << std::fixed << std::setprecision(6) << r.avg_step_time_ms
       << ',' << r.total_time_ms << ',' << to_string(r.final_makespan) << '\n';
  }
}

inline std::vector<BenchRow> parse_bench_csv(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  std::vector<BenchRow> rows;
  bool header_seen = false;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    if (line.size() != 1) throw ParseError(line[0].line, line[1].column, "unexpected whitespace in CSV");
    const detail::Token& t = line[0];
    if (!header_seen) {
      if (t.text != kBenchHeader) throw ParseError(t.line, 1, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss{std::string(t.text)};
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 11) throw ParseError(t.line, 1, "expected 11 CSV fields, got " + std::to_string(cells.size()));
    try {
      BenchRow r;
      r.class_label = cells[0];
      r.instance_id = std::stoull(cells[1]);
      r.n = std::stoull(cells[2]);
      r.m = std::stoull(cells[3]);
      r.k = std::stoi(cells[4]);
      r.op = cells[5];
      r.seed = std::stoull(cells[6]);
      r.improving_iterations = std::stoull(cells[7]);
      r.avg_step_time_ms = std::stod(cells[8]);
      r.total_time_ms = std::stod(cells[9]);
      if (!parse_weight(cells[10], r.final_makespan)) throw std::invalid_argument("makespan");
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError(t.line, 1, "malformed CSV row");
    }
  }
  if (!header_seen) throw ParseError(1, 1, "missing CSV header");
  return rows;
}

}  // namespace kswap
