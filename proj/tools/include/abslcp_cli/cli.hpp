#pragma once

#include "abslcp/solve_report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace abslcp::cli {

enum class OutputFormat { Table, Csv, CsvFull };

/// Exit codes of the abslcp tool.
inline constexpr int kExitConverged = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotConverged = 2;

/// Writes one row per record: k, z_1..z_n, merit, ||F||_inf. Table and Csv
/// round to 7 decimals; CsvFull prints round-trippable values.
void write_trace(std::ostream& out, const SolveReport& report, OutputFormat format);

/// Status, iteration count, final z and residual metrics.
void write_summary(std::ostream& out, const SolveReport& report, OutputFormat format);

/// Entry point behind main(); args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abslcp::cli
