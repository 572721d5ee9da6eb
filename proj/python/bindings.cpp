#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gas3km/engine.hpp"
#include "gas3km/functions.hpp"
#include "gas3km/harness.hpp"
#include "gas3km/operators.hpp"
#include "gas3km/speciation.hpp"

namespace py = pybind11;
using namespace gas3km;

namespace {

FunctionId function_from(const std::string& name) {
  const auto id = parse_function_id(name);
  if (!id) throw py::value_error("unknown function '" + name + "'");
  return *id;
}

Algorithm algorithm_from(const std::string& name) {
  const auto a = parse_algorithm(name);
  if (!a) throw py::value_error("unknown algorithm '" + name + "'");
  return *a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "GAS3 / GAS3KM real-coded genetic algorithms and benchmark functions";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("list_functions", [] {
    py::list out;
    for (const auto& meta : list_functions()) {
      py::dict d;
      d["name"] = std::string(meta.name);
      d["multimodal"] = meta.multimodal;
      d["separable"] = meta.separable;
      d["init_low"] = meta.init_low;
      d["init_high"] = meta.init_high;
      out.append(d);
    }
    return out;
  });

  m.def(
      "evaluate",
      [](const std::string& function, const std::vector<double>& x) { return evaluate(function_from(function), x); },
      py::arg("function"), py::arg("x"));

  m.def(
      "skewed_init",
      [](const std::string& function, std::size_t n, std::uint64_t seed) {
        RngStream rng(seed);
        return skewed_init(function_from(function), n, rng);
      },
      py::arg("function"), py::arg("n"), py::arg("seed"));

  m.def(
      "recombine",
      [](const std::string& kind, const std::vector<double>& female, const std::vector<std::vector<double>>& males,
         std::size_t lam, std::uint64_t seed) {
        Recombination k;
        if (kind == "mlx")
          k = Recombination::mlx;
        else if (kind == "mpx")
          k = Recombination::mpx;
        else
          throw py::value_error("kind must be 'mlx' or 'mpx'");
        std::vector<std::span<const double>> views(males.begin(), males.end());
        auto params = k == Recombination::mlx ? OperatorParams::mlx(female.size(), males.size() + 1, lam)
                                              : OperatorParams::mpx(female.size(), males.size() + 1, lam);
        RngStream rng(seed);
        return recombine(k, female, views, params, rng);
      },
      py::arg("kind"), py::arg("female"), py::arg("males"), py::arg("lam") = 2, py::arg("seed") = 1);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init([](const std::string& function, std::size_t dim, std::size_t pop_size, double pc, std::size_t r,
                       std::uint64_t seed, std::size_t max_fes, double target, const std::string& algorithm,
                       bool record_history) {
             RunConfig c;
             c.function = function_from(function);
             c.dimension = dim;
             c.pop_size = pop_size;
             c.pc = pc;
             c.r = r;
             c.seed = seed;
             c.max_fes = max_fes;
             c.target = target;
             c.algorithm = algorithm_from(algorithm);
             c.record_history = record_history;
             return c;
           }),
           py::arg("function") = "sphere", py::arg("dim") = 20, py::arg("pop_size") = 100, py::arg("pc") = 0.5,
           py::arg("r") = 5, py::arg("seed") = 1, py::arg("max_fes") = 1'000'000, py::arg("target") = 1e-10,
           py::arg("algorithm") = "gas3km", py::arg("record_history") = false)
      .def_property_readonly("function", [](const RunConfig& c) { return std::string(function_name(c.function)); })
      .def_property_readonly("algorithm", [](const RunConfig& c) { return std::string(algorithm_name(c.algorithm)); })
      .def_readwrite("dim", &RunConfig::dimension)
      .def_readwrite("pop_size", &RunConfig::pop_size)
      .def_readwrite("pc", &RunConfig::pc)
      .def_readwrite("r", &RunConfig::r)
      .def_readwrite("mu", &RunConfig::mu)
      .def_readwrite("lam", &RunConfig::lambda)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("max_fes", &RunConfig::max_fes)
      .def_readwrite("target", &RunConfig::target)
      .def("validate", &RunConfig::validate);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("fes_consumed", &RunResult::fes_consumed)
      .def_readonly("best_fitness", &RunResult::best_fitness)
      .def_readonly("success", &RunResult::success)
      .def_readonly("best_genes", &RunResult::best_genes)
      .def_readonly("initial_species", &RunResult::initial_species)
      .def_readonly("final_species", &RunResult::final_species)
      .def_readonly("total_evolutions", &RunResult::total_evolutions)
      .def_property_readonly("history",
                             [](const RunResult& r) {
                               std::vector<std::pair<std::size_t, double>> out;
                               for (const auto& c : r.history) out.emplace_back(c.fes, c.best_fitness);
                               return out;
                             })
      .def("__repr__", [](const RunResult& r) {
        return "RunResult(fes_consumed=" + std::to_string(r.fes_consumed) +
               ", best_fitness=" + std::to_string(r.best_fitness) + ", success=" + (r.success ? "True" : "False") + ")";
      });

  m.def("run", [](const RunConfig& c) { return run(c); }, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "kmeans_objective",
      [](const std::vector<std::vector<double>>& points, const std::vector<std::size_t>& females) {
        Population pop;
        pop.dimension = points.empty() ? 0 : points.front().size();
        for (const auto& p : points) pop.members.push_back(Individual{p, 0.0, Sex::male, 0});
        for (std::size_t f : females) {
          if (f >= pop.size()) throw py::index_error("female index out of range");
          pop[f].sex = Sex::female;
        }
        const auto species = form_species(pop);
        return kmeans_objective(pop, species);
      },
      py::arg("points"), py::arg("females"),
      "J after nearest-female assignment of every non-female point.");

  m.def(
      "run_grid",
      [](const std::vector<std::string>& functions, const std::vector<std::string>& algorithms,
         const std::vector<std::size_t>& dims, const std::vector<std::size_t>& pop_sizes,
         const std::vector<double>& pcs, const std::vector<std::size_t>& rs, std::size_t runs,
         std::uint64_t seed, std::size_t max_fes, double target) {
        ExperimentGrid grid;
        grid.functions.clear();
        for (const auto& f : functions) grid.functions.push_back(function_from(f));
        grid.algorithms.clear();
        for (const auto& a : algorithms) grid.algorithms.push_back(algorithm_from(a));
        grid.dims = dims;
        grid.pop_sizes = pop_sizes;
        grid.pcs = pcs;
        grid.rs = rs;
        grid.runs_per_cell = runs;
        grid.base_seed = seed;
        grid.max_fes = max_fes;
        grid.target = target;
        std::vector<SummaryRow> stats;
        {
          py::gil_scoped_release release;
          stats = summarize(run_experiment(grid));
        }
        py::list out;
        for (const auto& s : stats) {
          py::dict d;
          d["function"] = std::string(function_name(s.cell.function));
          d["algorithm"] = std::string(algorithm_name(s.cell.algorithm));
          d["dim"] = s.cell.dimension;
          d["N"] = s.cell.pop_size;
          d["pc"] = s.cell.pc;
          d["R"] = s.cell.r;
          d["best_run_fes"] = s.stats.best_run_fes;
          d["afes"] = s.stats.afes;
          d["worst_run_fes"] = s.stats.worst_run_fes;
          d["best"] = s.stats.best_fitness;
          d["avg"] = s.stats.avg_fitness;
          d["worst"] = s.stats.worst_fitness;
          d["success_pct"] = s.stats.success_pct;
          out.append(d);
        }
        return out;
      },
      py::arg("functions"), py::arg("algorithms") = std::vector<std::string>{"gas3", "gas3km"},
      py::arg("dims") = std::vector<std::size_t>{20}, py::arg("pop_sizes") = std::vector<std::size_t>{100},
      py::arg("pcs") = std::vector<double>{0.5}, py::arg("rs") = std::vector<std::size_t>{5}, py::arg("runs") = 5,
      py::arg("seed") = 1, py::arg("max_fes") = 1'000'000, py::arg("target") = 1e-10);
}
