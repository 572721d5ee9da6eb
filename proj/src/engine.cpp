#include "gas3km/engine.hpp"

#include <algorithm>
#include <numeric>

#include "gas3km/operators.hpp"

namespace gas3km {

std::size_t merge_period(std::size_t pop_size, std::size_t r) {
  return std::max<std::size_t>(1, pop_size * pop_size / r);
}

EvolveOutcome evolve_species_once(Species& species, Population& population,
                                  const RunConfig& config, RngStream& rng, EvalBudget& budget) {
  EvolveOutcome outcome;
  auto& female = population[species.female];

  // Selection plan.
  const std::size_t k = std::min(config.mu - 1, species.males.size());
  std::vector<std::size_t> selected;
  selected.reserve(k);
  for (std::size_t pick : rng.sample_distinct(species.males.size(), k))
    selected.push_back(species.males[pick]);

  // Generation plan.
  std::vector<Genes> offspring;
  const bool crossover = rng.uniform() < config.pc;
  if (crossover && !selected.empty()) {
    std::vector<std::span<const double>> males;
    males.reserve(selected.size());
    for (std::size_t m : selected) males.emplace_back(population[m].genes);
    offspring = recombine(Recombination::mpx, female.genes, males,
                          OperatorParams::mpx(population.dimension, config.mu, config.lambda), rng);
    outcome.recombined = true;
  } else {
    const auto params = OperatorParams::mpx(population.dimension, config.mu, config.lambda);
    offspring.reserve(config.lambda);
    for (std::size_t c = 0; c < config.lambda; ++c) offspring.push_back(mutate(female.genes, params, rng));
  }

  std::vector<double> fitness(offspring.size());
  for (std::size_t c = 0; c < offspring.size(); ++c) fitness[c] = budget.evaluate(offspring[c]);

  // Replacement plan: offspring ranked by fitness.
  std::vector<std::size_t> order(offspring.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });

  // Update plan.
  std::size_t next = 0;
  if (fitness[order[0]] < female.fitness) {
    female.genes = std::move(offspring[order[0]]);
    female.fitness = fitness[order[0]];
    ++species.performance_count;
    outcome.female_replaced = true;
    next = 1;
  }
  for (; next < order.size() && !selected.empty(); ++next) {
    const std::size_t c = order[next];
    const auto worst = std::max_element(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) {
      return population[a].fitness < population[b].fitness;
    });
    auto& male = population[*worst];
    if (!(fitness[c] < male.fitness)) break;
    male.genes = std::move(offspring[c]);
    male.fitness = fitness[c];
    ++outcome.males_replaced;
  }

  ++species.evolutions;
  return outcome;
}

RunResult run(const RunConfig& config, const RunHooks& hooks) {
  config.validate();

  EvalBudget budget(config.function, config.max_fes, config.target);
  budget.enable_history(config.record_history);
  RngStream rng(config.seed);
  RunResult result;

  Population population = init_population(config, rng, budget);
  std::vector<Species> species;

  if (!budget.should_stop()) {
    const SdmReport sdm = run_sdm(population, config, rng, budget);
    if (hooks.after_sdm) hooks.after_sdm(population, sdm);

    species = form_species(population);
    result.initial_species = species.size();
    if (hooks.after_species_formation) hooks.after_species_formation(population, species);

    if (config.algorithm == Algorithm::gas3km && !budget.should_stop()) {
      const ClusteringReport report = kmeans_recluster(population, species, budget);
      if (hooks.after_kmeans) hooks.after_kmeans(population, species, report);
    }
  }

  const std::size_t period = merge_period(config.pop_size, config.r);
  std::size_t cursor = 0;
  while (!species.empty() && !budget.should_stop()) {
    evolve_species_once(species[cursor], population, config, rng, budget);
    ++result.total_evolutions;
    if (hooks.after_evolution) hooks.after_evolution(result.total_evolutions, population, species);

    std::size_t next = cursor + 1;
    if (result.total_evolutions % period == 0) {
      if (hooks.before_merge) hooks.before_merge(result.total_evolutions, population, species);
      const auto absorbed = merge_species(species, population);
      ++result.merge_events;
      next -= static_cast<std::size_t>(
          std::count_if(absorbed.begin(), absorbed.end(), [&](std::size_t p) { return p < cursor + 1; }));
    }
    cursor = next % species.size();
  }

  result.fes_consumed = budget.consumed();
  result.best_fitness = budget.best_fitness();
  result.best_genes = budget.best_genes();
  result.success = result.best_fitness <= config.target;
  result.history = budget.history();
  result.final_species = species.size();
  return result;
}

}  // namespace gas3km
