#include "gas3km/csv.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace gas3km {

namespace {

std::string real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void write_cell(std::ostream& out, const CellKey& c) {
  out << function_name(c.function) << ',' << algorithm_name(c.algorithm) << ',' << c.dimension << ','
      << c.pop_size << ',' << real(c.pc) << ',' << c.r;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad number '" +
                             std::string(s) + "'");
  return v;
}

double parse_real(std::string_view s, std::size_t line_no) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  return parse_number<double>(s, line_no);
}

CellKey parse_cell(const std::vector<std::string_view>& f, std::size_t line_no) {
  CellKey c;
  const auto fn = parse_function_id(f[0]);
  const auto alg = parse_algorithm(f[1]);
  if (!fn || !alg)
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": unknown function or algorithm");
  c.function = *fn;
  c.algorithm = *alg;
  c.dimension = parse_number<std::size_t>(f[2], line_no);
  c.pop_size = parse_number<std::size_t>(f[3], line_no);
  c.pc = parse_real(f[4], line_no);
  c.r = parse_number<std::size_t>(f[5], line_no);
  return c;
}

template <typename Row, typename ParseRow>
std::vector<Row> read_rows(std::istream& in, std::string_view header, std::size_t fields, ParseRow parse) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw std::runtime_error("csv: unexpected header '" + line + "'");
  std::vector<Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != fields)
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(fields) + " fields");
    rows.push_back(parse(f, line_no));
  }
  return rows;
}

template <typename Fn>
void write_file(const std::filesystem::path& path, Fn fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  fn(out);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

}  // namespace

void write_raw_csv(std::span<const RunRow> rows, std::ostream& out) {
  out << kRawCsvHeader << '\n';
  for (const auto& r : rows) {
    write_cell(out, r.cell);
    out << ',' << r.run << ',' << r.seed << ',' << r.result.fes_consumed << ','
        << real(r.result.best_fitness) << ',' << (r.result.success ? 1 : 0) << '\n';
  }
}

void write_summary_csv(std::span<const SummaryRow> rows, std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& r : rows) {
    const auto& s = r.stats;
    write_cell(out, r.cell);
    out << ',' << s.best_run_fes << ',' << real(s.afes) << ',' << s.worst_run_fes << ','
        << real(s.best_fitness) << ',' << real(s.avg_fitness) << ',' << real(s.worst_fitness) << ','
        << percent(s.success_pct) << '\n';
  }
}

void write_raw_csv(std::span<const RunRow> rows, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_raw_csv(rows, out); });
}

void write_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_summary_csv(rows, out); });
}

std::vector<RunRow> read_raw_csv(std::istream& in) {
  return read_rows<RunRow>(in, kRawCsvHeader, 11, [](const auto& f, std::size_t line_no) {
    RunRow row;
    row.cell = parse_cell(f, line_no);
    row.run = parse_number<std::size_t>(f[6], line_no);
    row.seed = parse_number<std::uint64_t>(f[7], line_no);
    row.result.fes_consumed = parse_number<std::size_t>(f[8], line_no);
    row.result.best_fitness = parse_real(f[9], line_no);
    row.result.success = parse_number<int>(f[10], line_no) != 0;
    return row;
  });
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  return read_rows<SummaryRow>(in, kSummaryCsvHeader, 13, [](const auto& f, std::size_t line_no) {
    SummaryRow row;
    row.cell = parse_cell(f, line_no);
    auto& s = row.stats;
    s.best_run_fes = parse_number<std::size_t>(f[6], line_no);
    s.afes = parse_real(f[7], line_no);
    s.worst_run_fes = parse_number<std::size_t>(f[8], line_no);
    s.best_fitness = parse_real(f[9], line_no);
    s.avg_fitness = parse_real(f[10], line_no);
    s.worst_fitness = parse_real(f[11], line_no);
    s.success_pct = parse_real(f[12], line_no);
    return row;
  });
}

std::vector<RunRow> read_raw_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_raw_csv(in);
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_summary_csv(in);
}

}  // namespace gas3km
