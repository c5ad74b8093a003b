#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gasched/analysis.hpp"
#include "gasched/benchmark.hpp"
#include "gasched/engine.hpp"
#include "gasched/evaluator.hpp"
#include "gasched/taskgraph.hpp"

namespace gasched::cli {
namespace {

struct ReadError : std::runtime_error {
   using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
   std::ifstream in(path, std::ios::binary);
   if (!in) {
      throw ReadError("cannot read '" + path + "'");
   }
   return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   if (!out || !(out << content) || !out.flush()) {
      throw IoError("cannot write '" + path + "'");
   }
}

int default_workers() {
   return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

struct GenFlags {
   std::size_t tasks = 0;
   double edge_prob = 0.0;
   Time tmin = 1;
   Time tmax = 1;
   std::uint64_t seed = 1;
   std::string out;
};

struct GaFlags {
   std::string graph;
   int procs = 2;
   std::size_t pop = 100;
   std::size_t gens = 200;
   double pc = 0.8;
   double pm = 0.02;
   int workers = default_workers();
   std::uint64_t seed = 1;
   std::string mode = "par";
   std::string gantt;
   std::size_t patience = 0;

   [[nodiscard]] GAConfig config() const {
      GAConfig c;
      c.population_size = pop;
      c.generations = gens;
      c.crossover_prob = pc;
      c.mutation_prob = pm;
      c.target_processors = procs;
      c.workers = workers;
      c.seed = seed;
      return c;
   }
   [[nodiscard]] Mode engine_mode() const {
      return mode == "seq" ? Mode::Sequential : Mode::MasterSlave;
   }
};

struct BenchFlags {
   std::string suite;
   double scale = 1.0;
   std::size_t reps = 10;
   std::string out;
   std::optional<int> workers;
   std::size_t pop = 1000;
   std::size_t gens = 10;
   std::size_t tasks = 8;
   int procs = 2;
   std::uint64_t seed = 1;
};

void add_ga_options(CLI::App* cmd, GaFlags& f) {
   cmd->add_option("--graph", f.graph, "Graph file")->required();
   cmd->add_option("--procs", f.procs, "Target processors (m)")
        ->check(CLI::PositiveNumber);
   cmd->add_option("--pop", f.pop, "Population size (P)")
        ->check(CLI::Range(std::size_t{2}, SIZE_MAX));
   cmd->add_option("--gens", f.gens, "Generations (G)")
        ->check(CLI::PositiveNumber);
   cmd->add_option("--pc", f.pc, "Crossover probability")
        ->check(CLI::Range(0.0, 1.0));
   cmd->add_option("--pm", f.pm, "Mutation probability")
        ->check(CLI::Range(0.0, 1.0));
   cmd->add_option("--workers", f.workers, "Evaluation workers (nP)")
        ->check(CLI::PositiveNumber);
   cmd->add_option("--seed", f.seed, "RNG seed");
   cmd->add_option("--mode", f.mode, "Evaluation mode")
        ->check(CLI::IsMember({"seq", "par"}));
}

void print_header(std::ostream& out, std::string_view command,
                  const GaFlags& f) {
   out << "# gasched " << command << ": procs=" << f.procs << " pop=" << f.pop
       << " gens=" << f.gens << " pc=" << f.pc << " pm=" << f.pm
       << " workers=" << f.workers << " mode=" << f.mode
       << " seed=" << f.seed << '\n';
}

void print_chromosome(std::ostream& out, const Chromosome& c,
                      const TaskGraph& graph) {
   for (std::size_t p = 0; p < c.processors(); ++p) {
      out << "processor " << p << ':';
      for (TaskIndex t : c.lists[p]) {
         out << ' ' << graph.task(t).id;
      }
      out << '\n';
   }
}

int cmd_gen(const GenFlags& f, std::ostream& out) {
   const TaskGraph g = random_dag(f.tasks, f.edge_prob, f.tmin, f.tmax, f.seed);
   write_file(f.out, serialize_graph(g));
   out << "tasks " << g.size() << "\nedges " << g.edges().size() << '\n';
   return kOk;
}

int cmd_solve(const GaFlags& f, std::ostream& out) {
   const TaskGraph g = parse_graph(read_file(f.graph));
   const GAConfig config = f.config();
   const LowerBounds bounds = lower_bounds(g, f.procs);
   const GAResult r = f.patience > 0
                           ? run_to_convergence(config, g, f.engine_mode(),
                                                f.patience)
                           : run(config, g, f.engine_mode());
   if (!f.gantt.empty()) {
      write_file(f.gantt, gantt_csv(decode(r.best_chromosome, g), g));
   }
   print_header(out, "solve", f);
   out << "best_makespan " << r.best_makespan << '\n'
       << "critical_path " << bounds.critical_path << '\n'
       << "work_bound " << bounds.work_bound << '\n'
       << "generations " << r.history.size() << '\n'
       << "evaluations " << r.evaluations << '\n'
       << "wall_ms " << std::fixed << std::setprecision(3)
       << std::chrono::duration<double, std::milli>(r.wall_time).count()
       << '\n';
   print_chromosome(out, r.best_chromosome, g);
   return kOk;
}

int cmd_verify(const GaFlags& f, std::ostream& out) {
   const TaskGraph g = parse_graph(read_file(f.graph));
   const Time optimum = exhaustive_optimal(g, f.procs);
   const GAResult r = run(f.config(), g, f.engine_mode());
   print_header(out, "verify", f);
   out << "oracle_makespan " << optimum << '\n'
       << "ga_makespan " << r.best_makespan << '\n'
       << "gap " << (r.best_makespan - optimum) << '\n';
   return r.best_makespan == optimum ? kOk : kInvalid;
}

int cmd_bench(const BenchFlags& f, std::ostream& out) {
   BenchSuite suite;
   if (f.suite == "custom") {
      BenchCell cell;
      cell.population = f.pop;
      cell.generations = f.gens;
      cell.tasks = f.tasks;
      cell.target_processors = f.procs;
      cell.workers = f.workers.value_or(default_workers());
      cell.seed = f.seed;
      suite = {"custom", {cell}};
   } else {
      suite = make_suite(f.suite, f.scale, f.workers);
   }
   const BenchReport report = run_benchmark(suite, f.reps);
   write_report(report, f.out);
   out << "# gasched bench: suite=" << f.suite << " scale=" << f.scale
       << " reps=" << f.reps << " pc=0.8 pm=0.02\n";
   for (std::size_t i = 0; i + 1 < report.rows.size(); i += 2) {
      const BenchRow& seq = report.rows[i];
      const BenchRow& par = report.rows[i + 1];
      out << "cell pop=" << seq.cell.population
          << " gens=" << seq.cell.generations << " tasks=" << seq.cell.tasks
          << " workers=" << par.cell.workers << std::fixed
          << std::setprecision(3) << " seq_ms=" << seq.mean_wall_ms
          << " par_ms=" << par.mean_wall_ms
          << " speedup=" << par.measured_speedup << ' ' << par.trend_flag
          << '\n';
   }
   return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
   CLI::App app{"Multiprocessor task scheduling with a master-slave GA",
                "gasched"};
   app.require_subcommand(1);

   GenFlags gen;
   auto* gen_cmd = app.add_subcommand("gen", "Generate a random task graph");
   gen_cmd->add_option("--tasks", gen.tasks, "Task count")
        ->required()
        ->check(CLI::PositiveNumber);
   gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
   gen_cmd->add_option("--tmin", gen.tmin, "Minimum processing time")
        ->required()
        ->check(CLI::PositiveNumber);
   gen_cmd->add_option("--tmax", gen.tmax, "Maximum processing time")
        ->required()
        ->check(CLI::PositiveNumber);
   gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
   gen_cmd->add_option("--out", gen.out, "Output graph file")->required();

   GaFlags solve;
   auto* solve_cmd = app.add_subcommand("solve", "Run the GA on a graph");
   add_ga_options(solve_cmd, solve);
   solve_cmd->add_option("--gantt", solve.gantt, "Write the best schedule as CSV");
   solve_cmd->add_option("--patience", solve.patience,
                         "Stop after this many generations without improvement");

   GaFlags verify;
   verify.pop = 50;
   auto* verify_cmd =
        app.add_subcommand("verify", "Compare the GA with the exhaustive optimum");
   add_ga_options(verify_cmd, verify);

   BenchFlags bench;
   auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
   bench_cmd->add_option("--suite", bench.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "custom"}));
   bench_cmd->add_option("--scale", bench.scale, "Grid scale factor")
        ->check(CLI::PositiveNumber);
   bench_cmd->add_option("--reps", bench.reps, "Repetitions per cell")
        ->check(CLI::PositiveNumber);
   bench_cmd->add_option("--out", bench.out, "Report CSV")->required();
   bench_cmd->add_option("--workers", bench.workers, "Evaluation workers")
        ->check(CLI::PositiveNumber);
   bench_cmd->add_option("--pop", bench.pop, "custom: population size")
        ->check(CLI::Range(std::size_t{2}, SIZE_MAX));
   bench_cmd->add_option("--gens", bench.gens, "custom: generations")
        ->check(CLI::PositiveNumber);
   bench_cmd->add_option("--tasks", bench.tasks, "custom: task count")
        ->check(CLI::PositiveNumber);
   bench_cmd->add_option("--procs", bench.procs, "custom: target processors")
        ->check(CLI::PositiveNumber);
   bench_cmd->add_option("--seed", bench.seed, "custom: seed");

   try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
   } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
   } catch (const CLI::ParseError& e) {
      app.exit(e, err, err);
      err << app.help();
      return kUsage;
   }

   // Buffer primary output so nothing is printed on a failing exit.
   std::ostringstream report;
   int code = kOk;
   try {
      if (gen_cmd->parsed()) {
         if (gen.tmin > gen.tmax) {
            err << "error: --tmin must not exceed --tmax\n";
            return kUsage;
         }
         code = cmd_gen(gen, report);
      } else if (solve_cmd->parsed()) {
         code = cmd_solve(solve, report);
      } else if (verify_cmd->parsed()) {
         code = cmd_verify(verify, report);
      } else {
         code = cmd_bench(bench, report);
      }
   } catch (const GraphError& e) {
      err << "error: " << e.what() << '\n';
      return kInvalid;
   } catch (const ConfigError& e) {
      // Configuration problems that flag checks cannot see (oracle cap).
      err << "error: " << e.what() << '\n';
      return verify_cmd->parsed() ? kInvalid : kUsage;
   } catch (const ReadError& e) {
      err << "error: " << e.what() << '\n';
      return kIo;
   } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return kIo;
   }
   out << report.str();
   return code;
}

}  // namespace gasched::cli
