#pragma once

#include <cstddef>

#include "gas3km/core.hpp"

namespace gas3km {

struct SdmReport {
  std::size_t sweeps_planned = 0;
  std::size_t sweeps_completed = 0;
  std::size_t replacements = 0;
  std::size_t fes = 0;
  std::size_t females = 0;
  bool fallback_used = false;
  bool interrupted = false;
};

/// max(1, floor(N / R)).
std::size_t sdm_sweeps(std::size_t pop_size, std::size_t r);

/// Sex determination. Each sweep gives every member j one MLX trial with
/// mu-1 distinct random partners; the best of the lambda offspring replaces j
/// on strict improvement and bumps j's fertility count. Members whose count
/// exceeds the mean become female. When no member exceeds the mean the top
/// ceil(N/10) by (count desc, fitness asc) are made female.
///
/// Stops between trials once the budget says so; sexes are then assigned from
/// the counts accumulated so far.
SdmReport run_sdm(Population& population, const RunConfig& config, RngStream& rng,
                  EvalBudget& budget);

/// The labelling step alone, exposed for tests. Returns true when the fallback
/// rule was needed.
bool assign_sexes(Population& population);

}  // namespace gas3km
