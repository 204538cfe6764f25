#pragma once

#include <cstddef>
#include <filesystem>

namespace kwise::cli {

struct ReportSummary {
  std::size_t records = 0;  // distinct well-formed records
  std::size_t skipped = 0;  // malformed lines
  std::size_t f_rows = 0;
  std::size_t construction_rows = 0;
  std::size_t threshold_rows = 0;
};

/// Reads a JSONL ledger and writes f_table.csv, constructions.csv and
/// threshold.csv into `dir`. Malformed lines are skipped and counted. Two
/// records with the same command, params and seed but different results
/// raise an integrity error (wall-clock fields are ignored).
ReportSummary write_report(const std::filesystem::path& ledger, const std::filesystem::path& dir);

}  // namespace kwise::cli
