#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gas3km/harness.hpp"

namespace gas3km {

inline constexpr std::string_view kRawCsvHeader =
    "function,algorithm,dim,N,pc,R,run,seed,fes,best_fitness,success";
inline constexpr std::string_view kSummaryCsvHeader =
    "function,algorithm,dim,N,pc,R,best_run_fes,afes,worst_run_fes,best,avg,worst,success_pct";

/// Reals use the shortest representation that round-trips; success_pct is
/// printed with two decimals.
void write_raw_csv(std::span<const RunRow> rows, std::ostream& out);
void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out);

/// Throws std::runtime_error when the file cannot be written.
void write_raw_csv(std::span<const RunRow> rows, const std::filesystem::path& path);
void write_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path);

/// Throws std::runtime_error on unreadable files or malformed rows. Raw rows
/// come back with fes_consumed, best_fitness and success filled in.
std::vector<RunRow> read_raw_csv(std::istream& in);
std::vector<SummaryRow> read_summary_csv(std::istream& in);
std::vector<RunRow> read_raw_csv(const std::filesystem::path& path);
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

}  // namespace gas3km
