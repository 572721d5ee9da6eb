#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gas3km/functions.hpp"
#include "gas3km/rng.hpp"

namespace gas3km {

enum class Sex { unassigned, male, female };

struct Individual {
  std::vector<double> genes;
  double fitness = std::numeric_limits<double>::infinity();
  Sex sex = Sex::unassigned;
  std::size_t fertility_count = 0;
};

struct Population {
  FunctionId function = FunctionId::sphere;
  std::size_t dimension = 0;
  std::vector<Individual> members;

  std::size_t size() const noexcept { return members.size(); }
  Individual& operator[](std::size_t i) { return members[i]; }
  const Individual& operator[](std::size_t i) const { return members[i]; }
};

enum class Algorithm { gas3, gas3km };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct RunConfig {
  FunctionId function = FunctionId::sphere;
  std::size_t dimension = 20;
  std::size_t pop_size = 100;
  double pc = 0.5;
  std::size_t r = 5;
  std::size_t mu = 5;
  std::size_t lambda = 2;
  std::size_t max_fes = 1'000'000;
  double target = 1e-10;
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::gas3km;
  bool record_history = false;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct Checkpoint {
  std::size_t fes;
  double best_fitness;

  bool operator==(const Checkpoint&) const = default;
};

/// Function-evaluation accounting plus best-ever tracking. Every objective
/// evaluation in a run goes through evaluate(); the best point seen is kept
/// here, independent of what later happens to the population.
class EvalBudget {
 public:
  EvalBudget(FunctionId function, std::size_t limit,
             double target = -std::numeric_limits<double>::infinity());

  double evaluate(std::span<const double> genes);

  std::size_t consumed() const noexcept { return consumed_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t remaining() const noexcept { return consumed_ >= limit_ ? 0 : limit_ - consumed_; }
  bool exhausted() const noexcept { return consumed_ >= limit_; }
  bool target_reached() const noexcept { return best_fitness_ <= target_; }
  bool should_stop() const noexcept { return exhausted() || target_reached(); }

  double best_fitness() const noexcept { return best_fitness_; }
  const std::vector<double>& best_genes() const noexcept { return best_genes_; }

  /// When enabled, a checkpoint is appended each time the best-ever improves.
  void enable_history(bool on = true) { history_enabled_ = on; }
  const std::vector<Checkpoint>& history() const noexcept { return history_; }

 private:
  FunctionId function_;
  std::size_t limit_;
  double target_;
  std::size_t consumed_ = 0;
  double best_fitness_ = std::numeric_limits<double>::infinity();
  std::vector<double> best_genes_;
  bool history_enabled_ = false;
  std::vector<Checkpoint> history_;
};

/// N members with skewed-initialized genes, each evaluated once.
Population init_population(const RunConfig& config, RngStream& rng, EvalBudget& budget);

/// Index and fitness of the best member; ties go to the lowest index.
std::pair<std::size_t, double> best_of(const Population& population);

}  // namespace gas3km
