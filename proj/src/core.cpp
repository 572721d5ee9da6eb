#include "gas3km/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gas3km {

std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::gas3 ? "gas3" : "gas3km";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "gas3") return Algorithm::gas3;
  if (name == "gas3km") return Algorithm::gas3km;
  return std::nullopt;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid config: " + msg); };
  if (dimension < 2) fail("dimension must be >= 2");
  if (mu < 2) fail("mu must be >= 2");
  if (lambda < 1) fail("lambda must be >= 1");
  if (pop_size < mu) fail("population size must be >= mu");
  if (r < 1 || r > pop_size) fail("R must lie in [1, N]");
  if (!(pc >= 0.0 && pc <= 1.0)) fail("pc must lie in [0, 1]");
  if (max_fes < pop_size) fail("max_fes must cover the initial population");
  if (std::isnan(target)) fail("target must not be NaN");
}

EvalBudget::EvalBudget(FunctionId function, std::size_t limit, double target)
    : function_(function), limit_(limit), target_(target) {
  if (limit == 0) throw std::invalid_argument("EvalBudget: limit must be positive");
}

double EvalBudget::evaluate(std::span<const double> genes) {
  const double f = gas3km::evaluate(function_, genes);
  ++consumed_;
  if (f < best_fitness_) {
    best_fitness_ = f;
    best_genes_.assign(genes.begin(), genes.end());
    if (history_enabled_) history_.push_back({consumed_, f});
  }
  return f;
}

Population init_population(const RunConfig& config, RngStream& rng, EvalBudget& budget) {
  if (budget.remaining() < config.pop_size)
    throw std::invalid_argument("init_population: budget cannot cover the initial population");
  Population pop;
  pop.function = config.function;
  pop.dimension = config.dimension;
  pop.members.resize(config.pop_size);
  for (auto& m : pop.members) {
    m.genes = skewed_init(config.function, config.dimension, rng);
    m.fitness = budget.evaluate(m.genes);
  }
  return pop;
}

std::pair<std::size_t, double> best_of(const Population& population) {
  if (population.members.empty()) throw std::invalid_argument("best_of: empty population");
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i)
    if (population[i].fitness < population[best].fitness) best = i;
  return {best, population[best].fitness};
}

}  // namespace gas3km
