#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gas3km/core.hpp"
#include "gas3km/sdm.hpp"
#include "gas3km/speciation.hpp"

namespace gas3km {

struct RunResult {
  std::size_t fes_consumed = 0;
  double best_fitness = 0.0;
  bool success = false;
  std::vector<double> best_genes;
  /// (fes, best-ever) at each improvement; empty unless config.record_history.
  std::vector<Checkpoint> history;

  std::size_t initial_species = 0;
  std::size_t final_species = 0;
  std::size_t total_evolutions = 0;
  std::size_t merge_events = 0;

  bool operator==(const RunResult&) const = default;
};

struct EvolveOutcome {
  bool recombined = false;
  bool female_replaced = false;
  std::size_t males_replaced = 0;
};

/// Optional observation points inside run(); all receive read-only state.
struct RunHooks {
  std::function<void(const Population&, const SdmReport&)> after_sdm;
  std::function<void(const Population&, std::span<const Species>)> after_species_formation;
  std::function<void(const Population&, std::span<const Species>, const ClusteringReport&)>
      after_kmeans;
  std::function<void(std::size_t evolutions, const Population&, std::span<const Species>)>
      after_evolution;
  std::function<void(std::size_t evolutions, const Population&, std::span<const Species>)>
      before_merge;
};

/// floor(N*N/R), at least 1.
std::size_t merge_period(std::size_t pop_size, std::size_t r);

/// One pass of the selection, generation, replacement and update plans on a
/// single species.
EvolveOutcome evolve_species_once(Species& species, Population& population,
                                  const RunConfig& config, RngStream& rng, EvalBudget& budget);

/// Full GAS3 / GAS3KM run. Throws std::invalid_argument on an invalid config.
RunResult run(const RunConfig& config, const RunHooks& hooks = {});

}  // namespace gas3km
