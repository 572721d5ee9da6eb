#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gas3km/core.hpp"
#include "gas3km/engine.hpp"

namespace gas3km {

/// One experiment cell: everything but the run index.
struct CellKey {
  FunctionId function = FunctionId::sphere;
  Algorithm algorithm = Algorithm::gas3km;
  std::size_t dimension = 20;
  std::size_t pop_size = 100;
  double pc = 0.5;
  std::size_t r = 5;

  auto operator<=>(const CellKey&) const = default;
  bool operator==(const CellKey&) const = default;
};

std::string to_string(const CellKey& key);

struct ExperimentGrid {
  std::vector<FunctionId> functions;
  std::vector<Algorithm> algorithms{Algorithm::gas3, Algorithm::gas3km};
  std::vector<std::size_t> dims{20};
  std::vector<std::size_t> pop_sizes{100};
  std::vector<double> pcs{0.5};
  std::vector<std::size_t> rs{5};
  std::size_t runs_per_cell = 50;
  std::uint64_t base_seed = 1;
  std::size_t max_fes = 1'000'000;
  double target = 1e-10;

  /// Cartesian product in (function, algorithm, n, N, pc, R) order.
  std::vector<CellKey> cells() const;
};

/// Seed of run `run` in `cell`. Depends on the problem part of the cell
/// (function, n, N, pc, R) and not on the algorithm, so GAS3 and GAS3KM see
/// the same random streams for the same run index.
std::uint64_t cell_seed(std::uint64_t base_seed, const CellKey& cell, std::size_t run);

RunConfig make_config(const ExperimentGrid& grid, const CellKey& cell, std::size_t run);

struct RunRow {
  CellKey cell;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  RunResult result;
};

using Runner = std::function<RunResult(const RunConfig&)>;

/// Worker count: GAS3KM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t worker_threads();

/// One row per (cell, run), sorted by (function, algorithm, n, N, pc, R, run).
/// Cells whose config fails validation are skipped with a line on `diagnostics`.
std::vector<RunRow> run_experiment(const ExperimentGrid& grid, const Runner& runner = {},
                                   std::size_t threads = 0, std::ostream* diagnostics = nullptr);

struct CellStats {
  std::size_t runs = 0;
  std::size_t best_run_fes = 0;
  double afes = 0.0;
  std::size_t worst_run_fes = 0;
  double best_fitness = 0.0;
  double avg_fitness = 0.0;
  double worst_fitness = 0.0;
  double success_pct = 0.0;
};

struct SummaryRow {
  CellKey cell;
  CellStats stats;
};

/// Per-cell statistics, in cell order. AFES and fitness averages run over all
/// runs, converged or not. Best/worst run refer to FES.
std::vector<SummaryRow> summarize(std::span<const RunRow> rows);

}  // namespace gas3km
