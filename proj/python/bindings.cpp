#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gasched/analysis.hpp"
#include "gasched/benchmark.hpp"
#include "gasched/engine.hpp"
#include "gasched/evaluator.hpp"
#include "gasched/taskgraph.hpp"

namespace py = pybind11;

namespace gasched {
namespace {

using IdLists = std::vector<std::vector<std::string>>;

Mode parse_mode(const std::string& mode) {
   if (mode == "seq" || mode == "sequential") {
      return Mode::Sequential;
   }
   if (mode == "par" || mode == "master_slave") {
      return Mode::MasterSlave;
   }
   throw py::value_error("mode must be 'seq' or 'par', got '" + mode + "'");
}

IdLists to_ids(const Chromosome& c, const TaskGraph& g) {
   IdLists out(c.processors());
   for (std::size_t p = 0; p < c.processors(); ++p) {
      for (TaskIndex t : c.lists[p]) {
         out[p].push_back(g.task(t).id);
      }
   }
   return out;
}

Chromosome from_ids(const IdLists& lists, const TaskGraph& g) {
   Chromosome c;
   c.lists.resize(lists.size());
   for (std::size_t p = 0; p < lists.size(); ++p) {
      for (const auto& id : lists[p]) {
         if (!g.contains(id)) {
            throw py::key_error("unknown task id '" + id + "'");
         }
         c.lists[p].push_back(g.index_of(id));
      }
   }
   return c;
}

py::dict schedule_dict(const ScheduleResult& r, const TaskGraph& g) {
   py::dict start, finish, processor;
   for (TaskIndex t = 0; t < g.size(); ++t) {
      const auto& id = g.task(t).id;
      start[py::str(id)] = r.start[t];
      finish[py::str(id)] = r.finish[t];
      processor[py::str(id)] = r.processor[t];
   }
   py::dict out;
   out["start"] = start;
   out["finish"] = finish;
   out["processor"] = processor;
   out["makespan"] = r.makespan;
   return out;
}

}  // namespace
}  // namespace gasched

PYBIND11_MODULE(_gasched, m) {
   using namespace gasched;
   m.doc() = "Genetic-algorithm multiprocessor scheduling with master-slave "
             "fitness evaluation";

   py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
   py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

   py::class_<TaskGraph>(m, "TaskGraph")
        .def_static("parse", &parse_graph, py::arg("text"))
        .def("serialize", &serialize_graph)
        .def("__len__", &TaskGraph::size)
        .def_property_readonly("ids",
                               [](const TaskGraph& g) {
                                  std::vector<std::string> ids;
                                  for (const Task& t : g.tasks()) {
                                     ids.push_back(t.id);
                                  }
                                  return ids;
                               })
        .def_property_readonly("total_work", &TaskGraph::total_work)
        .def("heights", &compute_heights)
        .def("__eq__", [](const TaskGraph& a, const TaskGraph& b) { return a == b; });

   m.def("random_dag", &random_dag, py::arg("n"), py::arg("edge_prob"),
         py::arg("t_min"), py::arg("t_max"), py::arg("seed"));
   m.def(
        "lower_bounds",
        [](const TaskGraph& g, int procs) {
           const LowerBounds b = lower_bounds(g, procs);
           return py::make_tuple(b.critical_path, b.work_bound);
        },
        py::arg("graph"), py::arg("procs"),
        "Returns (critical_path, work_bound).");

   py::class_<GAConfig>(m, "GAConfig")
        .def(py::init([](std::size_t pop, std::size_t gens, double pc,
                         double pm, int procs, int workers,
                         std::uint64_t seed) {
                GAConfig c{pop, gens, pc, pm, procs, workers, seed};
                c.validate();
                return c;
             }),
             py::arg("population_size") = 100, py::arg("generations") = 100,
             py::arg("crossover_prob") = 0.8, py::arg("mutation_prob") = 0.02,
             py::arg("target_processors") = 2, py::arg("workers") = 1,
             py::arg("seed") = 1)
        .def_readwrite("population_size", &GAConfig::population_size)
        .def_readwrite("generations", &GAConfig::generations)
        .def_readwrite("crossover_prob", &GAConfig::crossover_prob)
        .def_readwrite("mutation_prob", &GAConfig::mutation_prob)
        .def_readwrite("target_processors", &GAConfig::target_processors)
        .def_readwrite("workers", &GAConfig::workers)
        .def_readwrite("seed", &GAConfig::seed);

   py::class_<GAResult>(m, "GAResult")
        .def_readonly("best_makespan", &GAResult::best_makespan)
        .def_readonly("history", &GAResult::history)
        .def_readonly("evaluations", &GAResult::evaluations)
        .def_property_readonly(
             "wall_seconds", [](const GAResult& r) { return r.wall_time.count(); });

   // best_chromosome is returned as task-id lists, which needs the graph.
   m.def(
        "run",
        [](const GAConfig& config, const TaskGraph& graph,
           const std::string& mode, std::size_t patience) {
           GAResult r;
           {
              py::gil_scoped_release release;
              r = patience == 0
                       ? run(config, graph, parse_mode(mode))
                       : run_to_convergence(config, graph, parse_mode(mode),
                                            patience);
           }
           return py::make_tuple(r, to_ids(r.best_chromosome, graph));
        },
        py::arg("config"), py::arg("graph"), py::arg("mode") = "seq",
        py::arg("patience") = 0,
        "Runs the GA; returns (GAResult, best chromosome as task-id lists).");

   m.def(
        "decode",
        [](const IdLists& lists, const TaskGraph& graph) {
           return schedule_dict(decode(from_ids(lists, graph), graph), graph);
        },
        py::arg("chromosome"), py::arg("graph"));
   m.def(
        "fitness",
        [](const IdLists& lists, const TaskGraph& graph) {
           return fitness_of(decode(from_ids(lists, graph), graph), graph);
        },
        py::arg("chromosome"), py::arg("graph"));
   m.def(
        "gantt_csv",
        [](const IdLists& lists, const TaskGraph& graph) {
           return gantt_csv(decode(from_ids(lists, graph), graph), graph);
        },
        py::arg("chromosome"), py::arg("graph"));

   m.def("exhaustive_optimal", &exhaustive_optimal, py::arg("graph"),
         py::arg("procs"));

   py::class_<ComplexityModel>(m, "ComplexityModel")
        .def(py::init([](std::int64_t P, std::int64_t G, double pc, double pm,
                         std::int64_t t_fitness, std::int64_t t_crossover,
                         std::int64_t t_mutation, std::int64_t workers,
                         std::int64_t cc) {
                return ComplexityModel{P, G, pc, pm, t_fitness, t_crossover,
                                       t_mutation, workers, cc};
             }),
             py::arg("population"), py::arg("generations"),
             py::arg("crossover_prob") = 0.0, py::arg("mutation_prob") = 0.0,
             py::arg("t_fitness") = 1, py::arg("t_crossover") = 0,
             py::arg("t_mutation") = 0, py::arg("workers") = 1,
             py::arg("communication") = 0);
   m.def("sequential_cost", [](const ComplexityModel& model) {
      const SequentialCost c = sequential_cost(model);
      return py::make_tuple(c.full, c.simplified);
   });
   m.def("parallel_cost", &parallel_cost);
   m.def("predicted_speedup", [](const ComplexityModel& model) {
      const SpeedupPrediction s = predicted_speedup(model);
      return py::make_tuple(s.ratio, s.closed_form);
   });
   m.def(
        "cost_optimality",
        [](const ComplexityModel& model, double threshold) {
           const CostOptimality c = cost_optimality(model, threshold);
           return py::make_tuple(c.cost, c.is_optimal);
        },
        py::arg("model"), py::arg("threshold") = 0.1);

   m.def(
        "bench_csv",
        [](const std::string& suite, double scale, std::size_t reps,
           std::optional<int> workers) {
           const BenchSuite s = make_suite(suite, scale, workers);
           py::gil_scoped_release release;
           return run_benchmark(s, reps).to_csv();
        },
        py::arg("suite"), py::arg("scale"), py::arg("reps") = 1,
        py::arg("workers") = py::none(),
        "Runs a built-in suite and returns the report as CSV text.");
}
