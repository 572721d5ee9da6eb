#include "gas3km/speciation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gas3km {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

namespace {

std::size_t nearest_species(const Population& pop, std::span<const Species> species,
                            std::span<const double> point) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < species.size(); ++s) {
    const double d = squared_distance(point, pop[species[s].female].genes);
    if (d < best_d) {
      best_d = d;
      best = s;
    }
  }
  return best;
}

// Reassigns every male to the nearest female; returns whether anything moved.
bool reassign(const Population& pop, std::vector<Species>& species) {
  std::vector<std::size_t> males;
  std::vector<std::size_t> owner;
  for (std::size_t s = 0; s < species.size(); ++s)
    for (std::size_t m : species[s].males) {
      males.push_back(m);
      owner.push_back(s);
    }
  std::sort(males.begin(), males.end());

  std::vector<std::vector<std::size_t>> next(species.size());
  for (std::size_t m : males) next[nearest_species(pop, species, pop[m].genes)].push_back(m);

  bool changed = false;
  for (std::size_t s = 0; s < species.size(); ++s) {
    auto current = species[s].males;
    std::sort(current.begin(), current.end());
    if (current != next[s]) changed = true;
    species[s].males = std::move(next[s]);
  }
  return changed;
}

}  // namespace

std::vector<Species> form_species(const Population& population) {
  std::vector<Species> species;
  for (std::size_t i = 0; i < population.size(); ++i)
    if (population[i].sex == Sex::female) species.push_back(Species{i, {}, 0, 0});
  if (species.empty()) throw std::invalid_argument("form_species: population has no female");

  for (std::size_t i = 0; i < population.size(); ++i) {
    if (population[i].sex == Sex::female) continue;
    species[nearest_species(population, species, population[i].genes)].males.push_back(i);
  }
  return species;
}

double kmeans_objective(const Population& population, std::span<const Species> species) {
  double j = 0.0;
  for (const auto& s : species)
    for (std::size_t m : s.males) j += squared_distance(population[m].genes, population[s.female].genes);
  return j;
}

ClusteringReport kmeans_recluster(Population& population, std::vector<Species>& species,
                                  EvalBudget& budget, const KmeansOptions& options) {
  ClusteringReport report;
  reassign(population, species);
  report.initial_objective = kmeans_objective(population, species);
  report.objective_trace.push_back(report.initial_objective);

  const std::size_t dim = population.dimension;
  std::vector<double> centroid(dim);
  while (report.iterations < options.max_iters) {
    double max_shift = 0.0;
    for (auto& s : species) {
      auto& female = population[s.female].genes;
      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t m : s.males)
        for (std::size_t d = 0; d < dim; ++d) centroid[d] += population[m].genes[d];
      const double count = static_cast<double>(s.males.size() + 1);
      for (std::size_t d = 0; d < dim; ++d) centroid[d] = (centroid[d] + female[d]) / count;
      max_shift = std::max(max_shift, std::sqrt(squared_distance(centroid, female)));
      female = centroid;
    }
    ++report.iterations;
    report.max_centroid_shift_last_iter = max_shift;
    report.objective_trace.push_back(kmeans_objective(population, species));

    const bool changed = reassign(population, species);
    report.objective_trace.push_back(kmeans_objective(population, species));
    if (!changed && (max_shift < options.epsilon || max_shift == 0.0)) break;
  }
  report.final_objective = report.objective_trace.back();

  for (const auto& s : species) {
    auto& female = population[s.female];
    if (budget.exhausted()) {
      female.fitness = std::numeric_limits<double>::infinity();
      report.budget_exhausted = true;
      continue;
    }
    female.fitness = budget.evaluate(female.genes);
    ++report.reevaluated;
  }
  return report;
}

std::vector<std::size_t> merge_species(std::vector<Species>& species, Population& population) {
  std::vector<std::size_t> absorbed;
  if (species.size() <= 1) return absorbed;

  const std::size_t k = species.size();
  std::size_t total = 0;
  for (const auto& s : species) total += s.performance_count;
  auto below_mean = [&](const Species& s) { return s.performance_count * k < total; };

  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < k; ++i)
    if (!below_mean(species[i])) targets.push_back(i);

  for (std::size_t i = 0; i < k; ++i) {
    if (!below_mean(species[i])) continue;
    const auto& from = species[i];
    std::size_t target = targets.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t t : targets) {
      const double d = squared_distance(population[from.female].genes, population[species[t].female].genes);
      if (d < best_d) {
        best_d = d;
        target = t;
      }
    }
    auto& into = species[target].males;
    into.push_back(from.female);
    into.insert(into.end(), from.males.begin(), from.males.end());
    population[from.female].sex = Sex::male;
    absorbed.push_back(i);
  }

  std::vector<Species> kept;
  kept.reserve(k - absorbed.size());
  for (std::size_t i = 0; i < k; ++i)
    if (!below_mean(species[i])) kept.push_back(std::move(species[i]));
  species = std::move(kept);
  for (auto& s : species) s.performance_count = 0;
  return absorbed;
}

bool is_partition(const Population& population, std::span<const Species> species) {
  std::vector<int> seen(population.size(), 0);
  for (const auto& s : species) {
    if (s.female >= population.size() || population[s.female].sex != Sex::female) return false;
    ++seen[s.female];
    for (std::size_t m : s.males) {
      if (m >= population.size() || population[m].sex != Sex::male) return false;
      ++seen[m];
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace gas3km
