#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gas3km/core.hpp"

namespace gas3km {

/// One female plus the males clustered around her. Indices refer to the
/// owning Population.
struct Species {
  std::size_t female = 0;
  std::vector<std::size_t> males;
  std::size_t performance_count = 0;
  std::size_t evolutions = 0;

  std::size_t size() const noexcept { return males.size() + 1; }
};

struct KmeansOptions {
  double epsilon = 1e-12;
  std::size_t max_iters = 100;
};

struct ClusteringReport {
  std::size_t iterations = 0;
  double initial_objective = 0.0;
  double final_objective = 0.0;
  double max_centroid_shift_last_iter = 0.0;
  /// J after the initial assignment, then after every move and every
  /// reassignment.
  std::vector<double> objective_trace;
  std::size_t reevaluated = 0;
  bool budget_exhausted = false;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

/// One species per female, in ascending female index. Each male joins the
/// female at minimal Euclidean distance; ties go to the lower female index.
/// Throws std::invalid_argument when there is no female.
std::vector<Species> form_species(const Population& population);

/// Sum over species of squared distances between each male and its female.
double kmeans_objective(const Population& population, std::span<const Species> species);

/// K-means with the females as centroids. Each iteration moves every female to
/// the mean of her males and herself, then reassigns the males to the nearest
/// female; it stops once no female moved by epsilon or more (Euclidean) and
/// the assignment is stable, or after max_iters. Every female is then
/// re-evaluated once through the budget. Females the budget cannot cover get
/// an infinite fitness and report.budget_exhausted is set.
ClusteringReport kmeans_recluster(Population& population, std::vector<Species>& species,
                                  EvalBudget& budget, const KmeansOptions& options = {});

/// Species with a below-mean performance count are absorbed by the nearest
/// (by female genes) species whose count is at or above the mean. The absorbed
/// female becomes a male of the absorber. All counts are reset. Returns the
/// pre-merge positions of the absorbed species, ascending.
std::vector<std::size_t> merge_species(std::vector<Species>& species, Population& population);

/// True when every population index is in exactly one species, each female is
/// tagged female and each male tagged male.
bool is_partition(const Population& population, std::span<const Species> species);

}  // namespace gas3km
