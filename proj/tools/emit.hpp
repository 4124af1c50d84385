#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "run_config.hpp"

namespace jacspec::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Verdict {
  std::string name;
  bool pass;
  double value;
};

struct RunReport {
  Table table;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  bool all_pass() const;
};

/// One cell rendered the same way everywhere: 17 significant digits for
/// doubles, plain decimal for integers.
std::string format_cell(const Cell& c);

/// Comma-separated, mandatory header row, LF terminators.
std::string to_csv(const Table& t);

/// {"config": {...}, "rows": [...], "verdicts": [...]}; rows carry the CSV
/// column names. Non-finite values appear as JSON null.
std::string to_json(const RunReport& report, const RunConfig& config);

/// Writes the table (csv) or the whole report (json) to config.out or
/// stdout, and a human-readable verdict summary next to it. Returns the
/// process exit code: 0, or 2 when a verdict failed.
int write_report(const RunReport& report, const RunConfig& config);

}  // namespace jacspec::cli
