#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gas3km/config_file.hpp"
#include "gas3km/csv.hpp"
#include "gas3km/engine.hpp"
#include "gas3km/harness.hpp"
#include "gas3km/svg_plot.hpp"

namespace gas3km {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string short_real(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

int run_single(const RunConfig& config, std::ostream& out) {
  const RunResult r = run(config);
  out << "fes: " << r.fes_consumed << "\n";
  out << "best_fitness: " << std::setprecision(17) << r.best_fitness << "\n";
  out << "success: " << (r.success ? "true" : "false") << "\n";
  return 0;
}

int run_grid(const ExperimentGrid& grid, const std::filesystem::path& out_dir, std::ostream& out,
             std::ostream& err) {
  std::filesystem::create_directories(out_dir);
  const auto rows = run_experiment(grid, {}, 0, &err);
  const auto stats = summarize(rows);
  write_raw_csv(rows, out_dir / "raw.csv");
  write_summary_csv(stats, out_dir / "summary.csv");
  for (const auto& s : stats)
    out << to_string(s.cell) << "  afes=" << short_real(s.stats.afes)
        << "  success=" << short_real(s.stats.success_pct) << "%\n";
  out << "wrote " << (out_dir / "raw.csv").string() << " and " << (out_dir / "summary.csv").string() << "\n";
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"GAS3 / GAS3KM real-coded genetic algorithm toolkit", "gas3km"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "Single optimization run");
  std::string function = "sphere";
  std::string algorithm = "gas3km";
  RunConfig config;
  run_cmd->add_option("--function", function, "Function id (see list-functions)");
  run_cmd->add_option("--dim", config.dimension, "Problem dimension n")->capture_default_str();
  run_cmd->add_option("--pop-size", config.pop_size, "Population size N")->capture_default_str();
  run_cmd->add_option("--pc", config.pc, "Crossover probability")->capture_default_str();
  run_cmd->add_option("--r", config.r, "Selection pressure parameter R")->capture_default_str();
  run_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  run_cmd->add_option("--max-fes", config.max_fes, "Function-evaluation budget")->capture_default_str();
  run_cmd->add_option("--target", config.target, "Success threshold")->capture_default_str();
  run_cmd->add_option("--algorithm", algorithm, "gas3 or gas3km")->capture_default_str();

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "Experiment grid with CSV output");
  std::string config_path;
  std::string out_dir = "results";
  std::map<std::string, std::string> inline_flags;
  grid_cmd->add_option("--config", config_path, "Config file or bundled name (paper_tables, paper_vs_n, paper_vs_r)");
  grid_cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  for (const char* key : {"functions", "algorithms", "dims", "pop-sizes", "pcs", "rs", "runs", "seed",
                          "max-fes", "target"}) {
    grid_cmd->add_option_function<std::string>(
        std::string("--") + key, [&inline_flags, key](const std::string& v) { inline_flags[key] = v; },
        "Grid setting; lists are comma separated");
  }

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "SVG plot of AFES from a summary CSV");
  std::string summary_path;
  std::string x_axis = "r";
  std::string svg_path;
  plot_cmd->add_option("--summary", summary_path, "summary.csv from the grid subcommand")->required();
  plot_cmd->add_option("--x", x_axis, "r or n")->check(CLI::IsMember({"r", "n"}))->capture_default_str();
  plot_cmd->add_option("--out", svg_path, "Output SVG path")->required();

  auto* list_cmd = app.add_subcommand("list-functions", "Print the function catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "gas3km: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*run_cmd) {
      const auto id = parse_function_id(function);
      if (!id) throw UsageError("unknown function '" + function + "'");
      const auto alg = parse_algorithm(algorithm);
      if (!alg) throw UsageError("unknown algorithm '" + algorithm + "'");
      config.function = *id;
      config.algorithm = *alg;
      config.validate();
      return run_single(config, out);
    }
    if (*grid_cmd) {
      ExperimentGrid grid;
      grid.functions = {FunctionId::sphere};
      if (!config_path.empty()) grid = load_grid_config(config_path);
      GridSettings settings(inline_flags.begin(), inline_flags.end());
      grid = apply_grid_settings(settings, grid);
      return run_grid(grid, out_dir, out, err);
    }
    if (*plot_cmd) {
      const auto stats = read_summary_csv(summary_path);
      emit_svg_plot(stats, x_axis == "r" ? PlotAxis::r : PlotAxis::pop_size, svg_path);
      out << "wrote " << svg_path << "\n";
      return 0;
    }
    if (*list_cmd) {
      for (const auto& meta : list_functions())
        out << std::left << std::setw(18) << meta.name << (meta.multimodal ? "multimodal" : "unimodal  ")
            << "  " << (meta.separable ? "separable" : "non-separable") << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "gas3km: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "gas3km: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "gas3km: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace gas3km
