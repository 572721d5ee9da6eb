#include "gas3km/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace gas3km {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string to_string(const CellKey& key) {
  return std::string(function_name(key.function)) + "/" + std::string(algorithm_name(key.algorithm)) +
         "/n=" + std::to_string(key.dimension) + "/N=" + std::to_string(key.pop_size) +
         "/pc=" + format_double(key.pc) + "/R=" + std::to_string(key.r);
}

std::vector<CellKey> ExperimentGrid::cells() const {
  std::vector<CellKey> out;
  for (auto f : functions)
    for (auto a : algorithms)
      for (auto n : dims)
        for (auto pop : pop_sizes)
          for (auto pc : pcs)
            for (auto r : rs) out.push_back({f, a, n, pop, pc, r});
  return out;
}

std::uint64_t cell_seed(std::uint64_t base_seed, const CellKey& cell, std::size_t run) {
  const std::string problem = std::string(function_name(cell.function)) + "|" +
                              std::to_string(cell.dimension) + "|" + std::to_string(cell.pop_size) +
                              "|" + format_double(cell.pc) + "|" + std::to_string(cell.r);
  return mix_seed(mix_seed(base_seed, fnv1a(problem)), run);
}

RunConfig make_config(const ExperimentGrid& grid, const CellKey& cell, std::size_t run) {
  RunConfig c;
  c.function = cell.function;
  c.algorithm = cell.algorithm;
  c.dimension = cell.dimension;
  c.pop_size = cell.pop_size;
  c.pc = cell.pc;
  c.r = cell.r;
  c.max_fes = grid.max_fes;
  c.target = grid.target;
  c.seed = cell_seed(grid.base_seed, cell, run);
  return c;
}

std::size_t worker_threads() {
  if (const char* env = std::getenv("GAS3KM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<RunRow> run_experiment(const ExperimentGrid& grid, const Runner& runner,
                                   std::size_t threads, std::ostream* diagnostics) {
  auto cells = grid.cells();
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  std::vector<RunRow> rows;
  std::vector<RunConfig> configs;
  for (const auto& cell : cells) {
    try {
      make_config(grid, cell, 0).validate();
    } catch (const std::invalid_argument& e) {
      if (diagnostics) *diagnostics << "skipping cell " << to_string(cell) << ": " << e.what() << "\n";
      continue;
    }
    for (std::size_t i = 0; i < grid.runs_per_cell; ++i) {
      RunRow row;
      row.cell = cell;
      row.run = i;
      configs.push_back(make_config(grid, cell, i));
      row.seed = configs.back().seed;
      rows.push_back(std::move(row));
    }
  }

  auto run_one = [&](std::size_t i) {
    rows[i].result = runner ? runner(configs[i]) : gas3km::run(configs[i]);
  };

  if (threads == 0) threads = worker_threads();
  threads = std::min(threads, rows.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) run_one(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SummaryRow> summarize(std::span<const RunRow> rows) {
  std::map<CellKey, std::vector<const RunRow*>> by_cell;
  for (const auto& row : rows) by_cell[row.cell].push_back(&row);

  std::vector<SummaryRow> out;
  out.reserve(by_cell.size());
  for (const auto& [cell, runs] : by_cell) {
    CellStats s;
    s.runs = runs.size();
    s.best_run_fes = runs.front()->result.fes_consumed;
    s.worst_run_fes = runs.front()->result.fes_consumed;
    s.best_fitness = runs.front()->result.best_fitness;
    s.worst_fitness = runs.front()->result.best_fitness;
    double fes_sum = 0.0, fit_sum = 0.0;
    std::size_t converged = 0;
    for (const RunRow* r : runs) {
      const auto& res = r->result;
      s.best_run_fes = std::min(s.best_run_fes, res.fes_consumed);
      s.worst_run_fes = std::max(s.worst_run_fes, res.fes_consumed);
      s.best_fitness = std::min(s.best_fitness, res.best_fitness);
      s.worst_fitness = std::max(s.worst_fitness, res.best_fitness);
      fes_sum += static_cast<double>(res.fes_consumed);
      fit_sum += res.best_fitness;
      if (res.success) ++converged;
    }
    const double n = static_cast<double>(runs.size());
    s.afes = fes_sum / n;
    s.avg_fitness = fit_sum / n;
    s.success_pct = 100.0 * static_cast<double>(converged) / n;
    out.push_back({cell, s});
  }
  return out;
}

}  // namespace gas3km
