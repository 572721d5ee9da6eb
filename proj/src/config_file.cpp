#include "gas3km/config_file.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gas3km {

namespace {

constexpr std::array<std::string_view, 10> kKeys{
    "functions", "algorithms", "dims", "pop-sizes", "pcs", "rs", "runs", "seed", "max-fes", "target"};

// Final-result table: every function, both algorithms, unimodal pc and multimodal pc.
constexpr std::string_view kPaperTables = R"(# Final-result table over all 13 functions.
functions = all
algorithms = gas3,gas3km
dims = 20
pop-sizes = 100
pcs = 0.3,0.5
rs = 5
runs = 20
seed = 2010
max-fes = 1000000
target = 1e-10
)";

// AFES against population size.
constexpr std::string_view kPaperVsN = R"(functions = ellipsoidal,schwefel,rosenbrock,rastrigin,griewangk,ackley
algorithms = gas3,gas3km
dims = 20
pop-sizes = 50,75,100,150,200
pcs = 0.5
rs = 5
runs = 20
seed = 2010
max-fes = 1000000
target = 1e-10
)";

// AFES against selection pressure R.
constexpr std::string_view kPaperVsR = R"(functions = ellipsoidal,schwefel,rosenbrock,rastrigin,griewangk,ackley
algorithms = gas3,gas3km
dims = 20
pop-sizes = 100
pcs = 0.5
rs = 1..10
runs = 20
seed = 2010
max-fes = 1000000
target = 1e-10
)";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto item = trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

template <typename T>
T number(std::string_view s) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad number '" + std::string(s) + "'");
  return v;
}

std::vector<std::size_t> integer_list(std::string_view s) {
  std::vector<std::size_t> out;
  for (auto item : split_list(s)) {
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = number<std::size_t>(trim(item.substr(0, dots)));
      const auto hi = number<std::size_t>(trim(item.substr(dots + 2)));
      if (lo > hi) throw std::invalid_argument("empty range '" + std::string(item) + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(number<std::size_t>(item));
    }
  }
  return out;
}

}  // namespace

GridSettings parse_grid_settings(std::string_view text) {
  GridSettings out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  std::string(key) + "'");
    out[std::string(key)] = std::string(value);
  }
  return out;
}

ExperimentGrid apply_grid_settings(const GridSettings& settings, ExperimentGrid grid) {
  for (const auto& [key, value] : settings) {
    try {
      if (key == "functions") {
        grid.functions.clear();
        if (value == "all") {
          for (const auto& meta : list_functions()) grid.functions.push_back(meta.id);
          continue;
        }
        for (auto item : split_list(value)) {
          const auto id = parse_function_id(item);
          if (!id) throw std::invalid_argument("unknown function '" + std::string(item) + "'");
          grid.functions.push_back(*id);
        }
      } else if (key == "algorithms") {
        grid.algorithms.clear();
        for (auto item : split_list(value)) {
          const auto a = parse_algorithm(item);
          if (!a) throw std::invalid_argument("unknown algorithm '" + std::string(item) + "'");
          grid.algorithms.push_back(*a);
        }
      } else if (key == "dims") {
        grid.dims = integer_list(value);
      } else if (key == "pop-sizes") {
        grid.pop_sizes = integer_list(value);
      } else if (key == "pcs") {
        grid.pcs.clear();
        for (auto item : split_list(value)) grid.pcs.push_back(number<double>(item));
      } else if (key == "rs") {
        grid.rs = integer_list(value);
      } else if (key == "runs") {
        grid.runs_per_cell = number<std::size_t>(value);
      } else if (key == "seed") {
        grid.base_seed = number<std::uint64_t>(value);
      } else if (key == "max-fes") {
        grid.max_fes = number<std::size_t>(value);
      } else if (key == "target") {
        grid.target = number<double>(value);
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(key + ": " + e.what());
    }
  }
  return grid;
}

std::optional<std::string_view> builtin_grid_config(std::string_view name) {
  if (name == "paper_tables") return kPaperTables;
  if (name == "paper_vs_n") return kPaperVsN;
  if (name == "paper_vs_r") return kPaperVsR;
  return std::nullopt;
}

ExperimentGrid load_grid_config(const std::string& name_or_path) {
  if (auto text = builtin_grid_config(name_or_path)) {
    ExperimentGrid grid = apply_grid_settings(parse_grid_settings(*text));
    return grid;
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("cannot read config '" + name_or_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return apply_grid_settings(parse_grid_settings(text.str()));
}

}  // namespace gas3km
