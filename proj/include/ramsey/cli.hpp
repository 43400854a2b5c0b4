#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/progressions.hpp"

namespace ramsey::cli {

enum ExitCode : int { ok = 0, usage = 1, budget = 2, property_failure = 3 };

/// Inclusive integer range parsed from "a..b" or "a"; empty when hi < lo.
struct Range {
  int lo = 0;
  int hi = -1;
  static Range parse(const std::string& text);
  bool empty() const { return hi < lo; }
};

struct TableSpec {
  Family family = Family::semi;
  Range params{1, 1};  // scope m or diameter n; ignored for arithmetic
  Range ks{3, 3};
  bool exact = false;  // run the exact search per row
  int max_n = 64;
  int threads = 1;
  std::uint64_t node_budget = 1'000'000'000ULL;
  std::chrono::milliseconds time_budget{0};  // per cell
};

/// One CSV row; every cell is already rendered ("n/a" when a column does
/// not apply to the row).
struct TableRow {
  std::string family, param, k;
  std::string constructive_lower, probabilistic_lower, exact, upper;
  std::string beta_pow_k, g_pow_k;
  std::string status;  // "ok", "violation: ...", "incomplete", or "n/a"
};

std::vector<TableRow> build_table(const TableSpec& spec);
std::string table_csv(const std::vector<TableRow>& rows);
/// CSV with a header row and one row per (family, param, k).
std::string emit_table(const TableSpec& spec);
bool has_violation(const std::vector<TableRow>& rows);

/// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnv = "RAMSEY_THREADS";

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and usage text to `err`. Returns an ExitCode value.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
