#include <stdexcept>
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gas3km/engine.hpp"

using namespace gas3km;

namespace {

RunConfig small_config(FunctionId f, std::uint64_t seed) {
  RunConfig c;
  c.function = f;
  c.dimension = 5;
  c.pop_size = 50;
  c.r = 5;
  c.pc = 0.5;
  c.seed = seed;
  return c;
}

Population make_points(const std::vector<std::vector<double>>& pts) {
  Population p;
  p.function = FunctionId::sphere;
  p.dimension = pts.front().size();
  for (const auto& x : pts) p.members.push_back(Individual{x, evaluate(FunctionId::sphere, x), Sex::male, 0});
  p[0].sex = Sex::female;
  return p;
}

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("merge period") {
    CHECK(merge_period(100, 5) == 2000);
    CHECK(merge_period(50, 3) == 833);
    CHECK(merge_period(2, 4) == 1);
  }

  TEST_CASE("selection plan picks min(mu-1, males) parents") {
    // 1 female, 6 males, mu = 5: four males plus the female.
    auto p = make_points({{0.0, 0.0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}});
    Species s{0, {1, 2, 3, 4, 5, 6}, 0, 0};
    RunConfig cfg;
    cfg.pc = 1.0;
    EvalBudget budget(FunctionId::sphere, 100);
    RngStream rng(2);
    const auto before = p;
    const auto outcome = evolve_species_once(s, p, cfg, rng, budget);
    CHECK(outcome.recombined);
    CHECK(budget.consumed() == 2);
    CHECK(s.evolutions == 1);
    // The female sits at the optimum, so nothing can replace her.
    CHECK_FALSE(outcome.female_replaced);
    CHECK(p[0].genes == before[0].genes);
    std::size_t changed = 0;
    for (std::size_t i = 1; i < 7; ++i) changed += p[i].genes != before[i].genes;
    CHECK(changed == outcome.males_replaced);
    CHECK(changed <= 2);
  }

  TEST_CASE("worse offspring leave the population unchanged") {
    auto p = make_points({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    Species s{0, {1, 2}, 0, 0};
    RunConfig cfg;
    cfg.pc = 0.0;
    EvalBudget budget(FunctionId::sphere, 100);
    RngStream rng(3);
    for (int i = 0; i < 20; ++i) {
      const auto outcome = evolve_species_once(s, p, cfg, rng, budget);
      CHECK_FALSE(outcome.female_replaced);
      CHECK(outcome.males_replaced == 0);
    }
    for (const auto& m : p.members) CHECK(m.genes == std::vector<double>{0.0, 0.0});
    CHECK(s.evolutions == 20);
    CHECK(s.performance_count == 0);
  }

  TEST_CASE("better offspring replaces the female and bumps the count once") {
    auto p = make_points({{3.0, 3.0}, {0.1, 0.1}, {0.2, -0.1}});
    Species s{0, {1, 2}, 0, 0};
    RunConfig cfg;
    cfg.pc = 1.0;
    EvalBudget budget(FunctionId::sphere, 1000);
    RngStream rng(4);
    bool seen = false;
    for (int i = 0; i < 200 && !seen; ++i) {
      const double before = p[0].fitness;
      const auto count = s.performance_count;
      const auto outcome = evolve_species_once(s, p, cfg, rng, budget);
      if (outcome.female_replaced) {
        seen = true;
        CHECK(p[0].fitness < before);
        CHECK(s.performance_count == count + 1);
      } else {
        CHECK(s.performance_count == count);
      }
    }
    CHECK(seen);
  }

  TEST_CASE("female without males falls back to mutation") {
    auto p = make_points({{1.0, 1.0}});
    Species s{0, {}, 0, 0};
    RunConfig cfg;
    cfg.pc = 1.0;
    EvalBudget budget(FunctionId::sphere, 100);
    RngStream rng(5);
    const auto outcome = evolve_species_once(s, p, cfg, rng, budget);
    CHECK_FALSE(outcome.recombined);
    CHECK(budget.consumed() == 2);
  }

  TEST_CASE("determinism and result invariants") {
    for (auto algo : {Algorithm::gas3, Algorithm::gas3km}) {
      auto cfg = small_config(FunctionId::rastrigin, 11);
      cfg.algorithm = algo;
      cfg.max_fes = 20000;
      cfg.record_history = true;
      const auto a = run(cfg);
      const auto b = run(cfg);
      CHECK(a == b);
      CHECK(a.success == (a.best_fitness <= cfg.target));
      CHECK(a.fes_consumed <= cfg.max_fes + cfg.lambda);
      CHECK(a.fes_consumed >= cfg.max_fes);
      CHECK(a.best_fitness == evaluate(cfg.function, a.best_genes));
      CHECK(a.final_species <= a.initial_species);
      for (std::size_t i = 1; i < a.history.size(); ++i) {
        CHECK(a.history[i].best_fitness < a.history[i - 1].best_fitness);
        CHECK(a.history[i].fes > a.history[i - 1].fes);
      }
    }
  }

  TEST_CASE("sphere smoke: n=5, N=50, R=5, 20 seeded runs all succeed") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto r = run(small_config(FunctionId::sphere, seed));
      CAPTURE(seed);
      CHECK(r.success);
      CHECK(r.best_fitness <= 1e-10);
    }
  }

  TEST_CASE("degenerate budgets") {
    auto cfg = small_config(FunctionId::sphere, 3);
    cfg.max_fes = cfg.pop_size;
    const auto r = run(cfg);
    CHECK(r.fes_consumed == cfg.pop_size);
    CHECK_FALSE(r.success);
    CHECK(r.total_evolutions == 0);

    cfg.max_fes = 1'000'000;
    cfg.target = 1e300;
    const auto easy = run(cfg);
    CHECK(easy.success);
    CHECK(easy.fes_consumed == cfg.pop_size);

    cfg.pop_size = 4;
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
  }

  TEST_CASE("trace hooks: cache coherence, equal chances, merge schedule, elitism") {
    auto cfg = small_config(FunctionId::ellipsoidal, 21);
    cfg.pop_size = 20;
    cfg.r = 4;
    cfg.max_fes = 6000;
    const std::size_t period = merge_period(cfg.pop_size, cfg.r);

    std::vector<std::size_t> merges;
    std::size_t last_species = 0;
    bool species_grew = false;
    bool coherent = true;
    bool partitioned = true;
    bool equal_chances = true;
    bool elitist = true;
    double best_so_far = 0.0;

    RunHooks hooks;
    hooks.after_kmeans = [&](const Population& p, std::span<const Species> s, const ClusteringReport&) {
      last_species = s.size();
      best_so_far = best_of(p).second;
    };
    hooks.after_evolution = [&](std::size_t total, const Population& p, std::span<const Species> s) {
      if (s.size() > last_species) species_grew = true;
      last_species = s.size();
      partitioned = partitioned && is_partition(p, s);
      for (std::size_t i = 0; i < p.size(); i += 3)
        coherent = coherent && p[i].fitness == evaluate(p.function, p[i].genes);
      const double best = best_of(p).second;
      elitist = elitist && best <= best_so_far;
      best_so_far = best;
      if (merges.empty() && total % s.size() == 0)
        for (const auto& sp : s) equal_chances = equal_chances && sp.evolutions == total / s.size();
    };
    hooks.before_merge = [&](std::size_t total, const Population&, std::span<const Species>) {
      merges.push_back(total);
    };
    const auto result = run(cfg, hooks);

    CHECK(coherent);
    CHECK(partitioned);
    CHECK(equal_chances);
    CHECK(elitist);
    CHECK_FALSE(species_grew);
    CHECK(result.merge_events == merges.size());
    CHECK_FALSE(merges.empty());
    for (std::size_t i = 0; i < merges.size(); ++i) CHECK(merges[i] == (i + 1) * period);
  }

  TEST_CASE("gas3 and gas3km agree through species formation") {
    auto cfg = small_config(FunctionId::griewangk, 8);
    cfg.max_fes = 5000;
    auto capture = [&](Algorithm algo) {
      cfg.algorithm = algo;
      std::vector<std::vector<double>> genes;
      std::vector<std::size_t> females;
      RunHooks hooks;
      hooks.after_species_formation = [&](const Population& p, std::span<const Species> s) {
        for (const auto& m : p.members) genes.push_back(m.genes);
        for (const auto& sp : s) females.push_back(sp.female);
      };
      run(cfg, hooks);
      return std::pair{genes, females};
    };
    const auto a = capture(Algorithm::gas3);
    const auto b = capture(Algorithm::gas3km);
    CHECK_FALSE(a.first.empty());
    CHECK(a == b);
  }

  TEST_CASE("best-ever is non-increasing across a sphere batch") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto cfg = small_config(FunctionId::sphere, seed);
      cfg.record_history = true;
      const auto r = run(cfg);
      for (std::size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i].best_fitness <= r.history[i - 1].best_fitness);
    }
  }
}
