#include "gasched/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "gasched/analysis.hpp"

namespace gasched {

std::string_view trend_flag(double measured_speedup) noexcept {
   if (measured_speedup >= 1.1) {
      return "parallel-favored";
   }
   if (measured_speedup <= 0.95) {
      return "sequential-favored";
   }
   return "neutral";
}

namespace {

std::size_t scaled(std::size_t value, double scale, std::size_t minimum) {
   const auto v = static_cast<std::size_t>(
        std::llround(static_cast<double>(value) * scale));
   return std::max(v, minimum);
}

}  // namespace

BenchSuite make_suite(std::string_view name, double scale,
                      std::optional<int> workers) {
   if (!(scale > 0.0)) {
      throw ConfigError("scale must be > 0");
   }
   BenchSuite suite{std::string(name), {}};
   auto cell = [&](std::size_t pop, std::size_t gens, std::size_t tasks, int m,
                   int default_workers) {
      BenchCell c;
      c.population = std::max<std::size_t>(pop, 2);
      c.generations = std::max<std::size_t>(gens, 1);
      c.tasks = tasks;
      c.target_processors = m;
      c.workers = workers.value_or(default_workers);
      c.seed = suite.cells.size() + 1;
      suite.cells.push_back(c);
   };
   // Only the quantities each experiment sweeps are scaled; the ones it
   // holds fixed keep their published values.
   const int hw = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
   if (name == "table1") {
      // Population sweep at two generations.
      for (std::size_t pop : {10000u, 500000u, 600000u}) {
         cell(scaled(pop, scale, 2), 2, 8, 2, hw);
      }
   } else if (name == "table2") {
      // Eight tasks on two processors; population and generations grow
      // together.
      for (std::size_t size : {1000u, 10000u}) {
         cell(scaled(size, scale, 2), scaled(size, scale, 1), 8, 2, hw);
      }
   } else if (name == "table3") {
      // Eighteen tasks, P = 10000, fifteen evaluation workers; generation
      // sweep.
      for (std::size_t gens : {1000u, 5000u, 10000u}) {
         cell(10000, scaled(gens, scale, 1), 18, 4, 15);
      }
   } else {
      throw ConfigError("unknown suite '" + std::string(name) + "'");
   }
   return suite;
}

std::string BenchReport::to_csv() const {
   std::ostringstream out;
   out.setf(std::ios::fixed);
   out << kCsvHeader << '\n';
   for (const BenchRow& r : rows) {
      out.precision(3);
      out << to_string(r.mode) << ',' << r.cell.population << ','
          << r.cell.generations << ',' << r.cell.tasks << ','
          << r.cell.target_processors << ','
          << (r.mode == Mode::Sequential ? 1 : r.cell.workers) << ','
          << r.cell.seed << ',' << r.reps << ',' << r.mean_wall_ms << ','
          << r.best_makespan << ',';
      out.precision(4);
      out << r.measured_speedup << ',' << r.predicted_speedup_ratio << ','
          << r.paper_speedup_form << ',';
      out.precision(3);
      out << r.cc_estimate_ms << ',' << r.trend_flag << '\n';
   }
   return out.str();
}

namespace {

struct Measured {
   double mean_ms = 0.0;
   GAResult last;
};

Measured measure(const GAConfig& config, const TaskGraph& graph, Mode mode,
                 std::size_t reps) {
   Measured m;
   double total = 0.0;
   for (std::size_t r = 0; r < reps; ++r) {
      m.last = run(config, graph, mode);
      total += std::chrono::duration<double, std::milli>(m.last.wall_time)
                    .count();
   }
   m.mean_ms = total / static_cast<double>(reps);
   return m;
}

}  // namespace

BenchReport run_benchmark(const BenchSuite& suite, std::size_t repetitions) {
   if (repetitions < 1) {
      throw ConfigError("repetitions must be >= 1");
   }
   BenchReport report{suite.name, {}};
   for (const BenchCell& cell : suite.cells) {
      const TaskGraph graph =
           random_dag(cell.tasks, cell.edge_prob, 1, 10, cell.seed);
      GAConfig config;
      config.population_size = cell.population;
      config.generations = cell.generations;
      config.crossover_prob = cell.crossover_prob;
      config.mutation_prob = cell.mutation_prob;
      config.target_processors = cell.target_processors;
      config.workers = cell.workers;
      config.seed = cell.seed;

      const Measured seq = measure(config, graph, Mode::Sequential, repetitions);
      const Measured par = measure(config, graph, Mode::MasterSlave, repetitions);

      const double nP = static_cast<double>(cell.workers);
      const double speedup = par.mean_ms > 0.0 ? seq.mean_ms / par.mean_ms : 1.0;
      // Residual the cost model attributes to coordination.
      const double cc_ms = par.mean_ms - seq.mean_ms / nP;

      // Model in nanoseconds: one fitness unit per evaluation round entry.
      const std::int64_t rounds =
           static_cast<std::int64_t>(cell.generations) + 1;
      const std::int64_t evaluations =
           static_cast<std::int64_t>(cell.population) * rounds;
      ComplexityModel model;
      model.population = static_cast<std::int64_t>(cell.population);
      model.generations = rounds;
      model.t_fitness = std::max<std::int64_t>(
           1, std::llround(seq.mean_ms * 1e6 / static_cast<double>(evaluations)));
      model.workers = cell.workers;
      model.communication = std::max<std::int64_t>(0, std::llround(cc_ms * 1e6));
      const SpeedupPrediction predicted = predicted_speedup(model);

      const std::string flag(trend_flag(speedup));
      BenchRow seq_row{Mode::Sequential, cell, repetitions, seq.mean_ms,
                       seq.last.best_makespan, 1.0, 1.0, 1.0, 0.0, flag,
                       seq.last.history};
      BenchRow par_row{Mode::MasterSlave, cell, repetitions, par.mean_ms,
                       par.last.best_makespan, speedup, predicted.ratio,
                       nP - cc_ms, cc_ms, flag, par.last.history};
      report.rows.push_back(std::move(seq_row));
      report.rows.push_back(std::move(par_row));
   }
   return report;
}

void write_report(const BenchReport& report, const std::string& path) {
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   if (!out) {
      throw IoError("cannot open '" + path + "' for writing");
   }
   out << report.to_csv();
   out.flush();
   if (!out) {
      throw IoError("failed writing '" + path + "'");
   }
}

}  // namespace gasched
