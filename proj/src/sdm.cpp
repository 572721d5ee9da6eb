#include "gas3km/sdm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gas3km/operators.hpp"

namespace gas3km {

std::size_t sdm_sweeps(std::size_t pop_size, std::size_t r) {
  if (r == 0) throw std::invalid_argument("sdm_sweeps: R must be positive");
  return std::max<std::size_t>(1, pop_size / r);
}

bool assign_sexes(Population& population) {
  const std::size_t n = population.size();
  if (n == 0) return false;
  // Sum is exact in integers; compare count * n > total to avoid rounding.
  const std::size_t total = std::accumulate(
      population.members.begin(), population.members.end(), std::size_t{0},
      [](std::size_t acc, const Individual& m) { return acc + m.fertility_count; });

  bool any_female = false;
  for (auto& m : population.members) {
    const bool female = m.fertility_count * n > total;
    m.sex = female ? Sex::female : Sex::male;
    any_female = any_female || female;
  }
  if (any_female) return false;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ma = population[a];
    const auto& mb = population[b];
    if (ma.fertility_count != mb.fertility_count) return ma.fertility_count > mb.fertility_count;
    return ma.fitness < mb.fitness;
  });
  const std::size_t k = (n + 9) / 10;
  for (std::size_t i = 0; i < k; ++i) population[order[i]].sex = Sex::female;
  return true;
}

SdmReport run_sdm(Population& population, const RunConfig& config, RngStream& rng,
                  EvalBudget& budget) {
  const std::size_t n = population.size();
  if (n < config.mu) throw std::invalid_argument("run_sdm: population smaller than mu");

  SdmReport report;
  report.sweeps_planned = sdm_sweeps(n, config.r);
  const auto params = OperatorParams::mlx(population.dimension, config.mu, config.lambda);
  const std::size_t fes_before = budget.consumed();

  std::vector<std::span<const double>> partners(config.mu - 1);
  for (std::size_t sweep = 0; sweep < report.sweeps_planned && !report.interrupted; ++sweep) {
    for (std::size_t j = 0; j < n; ++j) {
      if (budget.should_stop()) {
        report.interrupted = true;
        break;
      }
      const auto picks = rng.sample_distinct(n, config.mu - 1, j);
      for (std::size_t p = 0; p < picks.size(); ++p) partners[p] = population[picks[p]].genes;

      auto offspring = recombine(Recombination::mlx, population[j].genes, partners, params, rng);
      std::size_t best = 0;
      double best_fitness = budget.evaluate(offspring[0]);
      for (std::size_t c = 1; c < offspring.size(); ++c) {
        const double f = budget.evaluate(offspring[c]);
        if (f < best_fitness) {
          best_fitness = f;
          best = c;
        }
      }
      if (best_fitness < population[j].fitness) {
        population[j].genes = std::move(offspring[best]);
        population[j].fitness = best_fitness;
        ++population[j].fertility_count;
        ++report.replacements;
      }
    }
    if (!report.interrupted) ++report.sweeps_completed;
  }

  report.fes = budget.consumed() - fes_before;
  report.fallback_used = assign_sexes(population);
  report.females = static_cast<std::size_t>(
      std::count_if(population.members.begin(), population.members.end(),
                    [](const Individual& m) { return m.sex == Sex::female; }));
  return report;
}

}  // namespace gas3km
