#include <stdexcept>
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

#include "gas3km/config_file.hpp"
#include "gas3km/csv.hpp"
#include "gas3km/harness.hpp"
#include "gas3km/svg_plot.hpp"

using namespace gas3km;

namespace {

RunRow row_with(std::size_t fes, double fitness, bool success, std::size_t run = 0) {
  RunRow r;
  r.run = run;
  r.result.fes_consumed = fes;
  r.result.best_fitness = fitness;
  r.result.success = success;
  return r;
}

// Synthetic runner: outcome derived from the seed only.
RunResult fake_runner(const RunConfig& c) {
  RunResult r;
  r.fes_consumed = 1000 + c.seed % 9000;
  r.best_fitness = static_cast<double>(c.seed % 97) * 1e-3;
  r.success = r.best_fitness <= c.target;
  return r;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::vector<double> polyline_ys(const std::string& svg) {
  const std::regex re("<polyline[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  std::vector<double> ys;
  std::istringstream pts(m[1].str());
  std::string pair;
  while (pts >> pair) ys.push_back(std::stod(pair.substr(pair.find(',') + 1)));
  return ys;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("summarize arithmetic") {
    std::vector<RunRow> rows{row_with(100, 1e-11, true, 0), row_with(200, 2e-11, true, 1),
                             row_with(300, 3e-11, true, 2)};
    const auto s = summarize(rows);
    REQUIRE(s.size() == 1);
    CHECK(s[0].stats.afes == 200.0);
    CHECK(s[0].stats.success_pct == 100.0);
    CHECK(s[0].stats.best_run_fes == 100);
    CHECK(s[0].stats.worst_run_fes == 300);
    CHECK(s[0].stats.best_fitness == 1e-11);
    CHECK(s[0].stats.worst_fitness == 3e-11);

    std::vector<RunRow> ten;
    for (std::size_t i = 0; i < 10; ++i) ten.push_back(row_with(1000 + i, 0.0, i != 4, i));
    CHECK(summarize(ten)[0].stats.success_pct == 90.0);

    std::vector<RunRow> capped(4, row_with(1'000'002, 0.5, false));
    CHECK(summarize(capped)[0].stats.afes == 1'000'002.0);
  }

  TEST_CASE("summary invariants on random rows") {
    RngStream rng(12);
    for (int t = 0; t < 200; ++t) {
      std::vector<RunRow> rows;
      const std::size_t n = 1 + rng.below(20);
      for (std::size_t i = 0; i < n; ++i)
        rows.push_back(row_with(1 + rng.below(1'000'000), rng.uniform(), rng.uniform() < 0.5, i));
      const auto s = summarize(rows)[0].stats;
      CHECK(static_cast<double>(s.best_run_fes) <= s.afes);
      CHECK(s.afes <= static_cast<double>(s.worst_run_fes));
      CHECK(s.best_fitness <= s.avg_fitness * (1 + 1e-12));
      CHECK(s.avg_fitness <= s.worst_fitness * (1 + 1e-12));
      const auto converged = std::count_if(rows.begin(), rows.end(), [](const RunRow& r) { return r.result.success; });
      CHECK(s.success_pct == 100.0 * static_cast<double>(converged) / static_cast<double>(n));
    }
  }

  TEST_CASE("grid shape and ordering") {
    ExperimentGrid g;
    g.functions = {FunctionId::sphere};
    g.algorithms = {Algorithm::gas3km};
    g.runs_per_cell = 3;
    CHECK(run_experiment(g, fake_runner, 1).size() == 3);

    g.functions = {FunctionId::rastrigin};
    g.pop_sizes = {50, 75, 100, 150, 200};
    g.rs = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(g.cells().size() == 50);

    g.functions = {FunctionId::rastrigin, FunctionId::sphere};
    g.algorithms = {Algorithm::gas3km, Algorithm::gas3};
    g.pop_sizes = {100};
    g.rs = {5, 2};
    g.runs_per_cell = 2;
    const auto rows = run_experiment(g, fake_runner, 4);
    REQUIRE(rows.size() == 16);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto a = std::tie(rows[i - 1].cell, rows[i - 1].run);
      const auto b = std::tie(rows[i].cell, rows[i].run);
      CHECK(a < b);
    }
  }

  TEST_CASE("seeds ignore the algorithm and differ across runs and cells") {
    CellKey a{FunctionId::sphere, Algorithm::gas3, 20, 100, 0.5, 5};
    CellKey b = a;
    b.algorithm = Algorithm::gas3km;
    CHECK(cell_seed(1, a, 0) == cell_seed(1, b, 0));
    CHECK(cell_seed(1, a, 0) != cell_seed(1, a, 1));
    CHECK(cell_seed(1, a, 0) != cell_seed(2, a, 0));
    CellKey c = a;
    c.r = 6;
    CHECK(cell_seed(1, a, 0) != cell_seed(1, c, 0));
  }

  TEST_CASE("invalid cells are skipped with a diagnostic") {
    ExperimentGrid g;
    g.functions = {FunctionId::sphere};
    g.algorithms = {Algorithm::gas3};
    g.pop_sizes = {10};
    g.rs = {5, 20};
    g.runs_per_cell = 2;
    std::ostringstream diag;
    const auto rows = run_experiment(g, fake_runner, 1, &diag);
    CHECK(rows.size() == 2);
    CHECK(diag.str().find("R=20") != std::string::npos);
  }

  TEST_CASE("grid determinism and cell independence with the real engine") {
    ExperimentGrid g;
    g.functions = {FunctionId::sphere, FunctionId::ellipsoidal};
    g.algorithms = {Algorithm::gas3, Algorithm::gas3km};
    g.dims = {4};
    g.pop_sizes = {20};
    g.rs = {4};
    g.runs_per_cell = 2;
    g.max_fes = 3000;
    const auto a = run_experiment(g, {}, 4);
    const auto b = run_experiment(g, {}, 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].seed == b[i].seed);
      CHECK(a[i].result == b[i].result);
    }

    ExperimentGrid alone = g;
    alone.functions = {FunctionId::ellipsoidal};
    alone.algorithms = {Algorithm::gas3km};
    const auto solo = run_experiment(alone, {}, 2);
    for (const auto& row : solo) {
      const auto it = std::find_if(a.begin(), a.end(), [&](const RunRow& r) { return r.cell == row.cell && r.run == row.run; });
      REQUIRE(it != a.end());
      CHECK(it->result == row.result);
    }
  }

  TEST_CASE("csv writing") {
    std::ostringstream empty;
    write_raw_csv(std::span<const RunRow>{}, empty);
    CHECK(empty.str() == std::string(kRawCsvHeader) + "\n");

    RunRow r = row_with(1234, 0.1, false, 3);
    r.cell = {FunctionId::rastrigin_skewed, Algorithm::gas3, 20, 100, 0.3, 2};
    r.seed = 99;
    std::ostringstream one;
    write_raw_csv(std::span<const RunRow>(&r, 1), one);
    CHECK(one.str() == std::string(kRawCsvHeader) + "\nrastrigin_skewed,gas3,20,100,0.3,2,3,99,1234,0.1,0\n");

    SummaryRow s{r.cell, CellStats{3, 10, 20.5, 30, 1e-11, 0.25, std::numeric_limits<double>::infinity(), 200.0 / 3.0}};
    std::ostringstream sum;
    write_summary_csv(std::span<const SummaryRow>(&s, 1), sum);
    CHECK(sum.str() == std::string(kSummaryCsvHeader) + "\nrastrigin_skewed,gas3,20,100,0.3,2,10,20.5,30,1e-11,0.25,inf,66.67\n");
  }

  TEST_CASE("csv round trip is exact") {
    ExperimentGrid g;
    g.functions = {FunctionId::griewangk, FunctionId::ackley};
    g.pcs = {0.3, 0.1};
    g.rs = {1, 7};
    g.runs_per_cell = 5;
    g.target = 0.05;
    const auto rows = run_experiment(g, fake_runner, 2);
    const auto stats = summarize(rows);

    std::stringstream raw;
    write_raw_csv(rows, raw);
    const auto parsed_rows = read_raw_csv(raw);
    REQUIRE(parsed_rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(parsed_rows[i].cell == rows[i].cell);
      CHECK(parsed_rows[i].run == rows[i].run);
      CHECK(parsed_rows[i].seed == rows[i].seed);
      CHECK(parsed_rows[i].result.fes_consumed == rows[i].result.fes_consumed);
      CHECK(parsed_rows[i].result.best_fitness == rows[i].result.best_fitness);
      CHECK(parsed_rows[i].result.success == rows[i].result.success);
    }

    std::stringstream sum;
    write_summary_csv(stats, sum);
    const auto parsed = read_summary_csv(sum);
    REQUIRE(parsed.size() == stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) {
      CHECK(parsed[i].cell == stats[i].cell);
      CHECK(parsed[i].stats.best_run_fes == stats[i].stats.best_run_fes);
      CHECK(parsed[i].stats.afes == stats[i].stats.afes);
      CHECK(parsed[i].stats.worst_run_fes == stats[i].stats.worst_run_fes);
      CHECK(parsed[i].stats.best_fitness == stats[i].stats.best_fitness);
      CHECK(parsed[i].stats.avg_fitness == stats[i].stats.avg_fitness);
      CHECK(parsed[i].stats.worst_fitness == stats[i].stats.worst_fitness);
      CHECK(parsed[i].stats.success_pct == doctest::Approx(stats[i].stats.success_pct).epsilon(0.005 / 100));
    }
    // Summaries recomputed from parsed raw rows match the in-memory ones.
    const auto again = summarize(parsed_rows);
    for (std::size_t i = 0; i < stats.size(); ++i) CHECK(again[i].stats.afes == stats[i].stats.afes);
  }

  TEST_CASE("csv parse errors") {
    std::istringstream bad_header("function,algorithm\n");
    CHECK_THROWS(read_raw_csv(bad_header));
    std::istringstream short_row(std::string(kRawCsvHeader) + "\nsphere,gas3,20\n");
    CHECK_THROWS(read_raw_csv(short_row));
    std::istringstream bad_fn(std::string(kRawCsvHeader) + "\nnosuch,gas3,20,100,0.5,5,0,1,10,0.5,0\n");
    CHECK_THROWS(read_raw_csv(bad_fn));
  }

  TEST_CASE("config parsing") {
    const auto settings = parse_grid_settings(
        "# comment\n"
        "functions = sphere, rastrigin  # trailing\n"
        "\n"
        "algorithms = gas3km\n"
        "rs = 1..3, 7\n"
        "pcs = 0.3,0.5\n"
        "runs = 4\n"
        "seed = 42\n"
        "max-fes = 5000\n"
        "target = 1e-8\n");
    const auto g = apply_grid_settings(settings);
    CHECK(g.functions == std::vector<FunctionId>{FunctionId::sphere, FunctionId::rastrigin});
    CHECK(g.algorithms == std::vector<Algorithm>{Algorithm::gas3km});
    CHECK(g.rs == std::vector<std::size_t>{1, 2, 3, 7});
    CHECK(g.pcs == std::vector<double>{0.3, 0.5});
    CHECK(g.runs_per_cell == 4);
    CHECK(g.base_seed == 42);
    CHECK(g.max_fes == 5000);
    CHECK(g.target == 1e-8);
    CHECK(g.dims == std::vector<std::size_t>{20});

    CHECK(apply_grid_settings(parse_grid_settings("functions = all")).functions.size() == kFunctionCount);
    CHECK_THROWS_AS(parse_grid_settings("nokey = 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid_settings("functions sphere"), std::invalid_argument);
    CHECK_THROWS_AS(apply_grid_settings(parse_grid_settings("functions = nosuch")), std::invalid_argument);
    CHECK_THROWS_AS(apply_grid_settings(parse_grid_settings("rs = 5..2")), std::invalid_argument);
    CHECK_THROWS_AS(apply_grid_settings(parse_grid_settings("runs = x")), std::invalid_argument);

    for (const char* name : {"paper_tables", "paper_vs_n", "paper_vs_r"}) {
      CAPTURE(name);
      const auto grid = load_grid_config(name);
      CHECK(grid.runs_per_cell == 20);
      CHECK_FALSE(grid.cells().empty());
    }
    CHECK(load_grid_config("paper_vs_r").rs.size() == 10);
    CHECK(load_grid_config("paper_vs_n").pop_sizes == std::vector<std::size_t>{50, 75, 100, 150, 200});
  }

  TEST_CASE("svg structure") {
    std::vector<SummaryRow> stats;
    for (auto algo : {Algorithm::gas3, Algorithm::gas3km})
      for (std::size_t r = 1; r <= 10; ++r) {
        SummaryRow s;
        s.cell = {FunctionId::rastrigin, algo, 20, 100, 0.3, r};
        s.stats.afes = 1000.0 * static_cast<double>(r) + (algo == Algorithm::gas3 ? 500.0 : 0.0);
        stats.push_back(s);
      }
    const auto series = afes_series(stats, PlotAxis::r);
    REQUIRE(series.size() == 2);
    const auto svg = render_svg_plot(series, PlotAxis::r);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_of(svg, "<polyline") == 2);
    CHECK(svg == render_svg_plot(series, PlotAxis::r));

    // Increasing AFES maps to decreasing screen y.
    const auto ys = polyline_ys(svg);
    REQUIRE(ys.size() == 10);
    for (std::size_t i = 1; i < ys.size(); ++i) CHECK(ys[i] < ys[i - 1]);

    std::vector<PlotSeries> single{{"gas3km", {{5.0, 100.0}}}};
    const auto marker = render_svg_plot(single, PlotAxis::pop_size);
    CHECK(count_of(marker, "<polyline") == 0);
    CHECK(count_of(marker, "<circle") == 1);
  }

  TEST_CASE("svg series group by function when several are present") {
    std::vector<SummaryRow> stats;
    for (auto f : {FunctionId::sphere, FunctionId::ackley})
      for (auto algo : {Algorithm::gas3, Algorithm::gas3km})
        for (std::size_t n : {50u, 100u}) {
          SummaryRow s;
          s.cell = {f, algo, 20, n, 0.5, 5};
          s.stats.afes = static_cast<double>(n);
          stats.push_back(s);
        }
    const auto series = afes_series(stats, PlotAxis::pop_size);
    CHECK(series.size() == 4);
    for (const auto& s : series) CHECK(s.points.size() == 2);
  }
}
