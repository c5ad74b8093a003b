#ifndef GASCHED_BENCHMARK_HPP_
#define GASCHED_BENCHMARK_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gasched/engine.hpp"

namespace gasched {

/// One experiment: a random instance plus a GA configuration, run once in
/// each mode.
struct BenchCell {
   std::size_t population = 2;
   std::size_t generations = 1;
   std::size_t tasks = 8;
   int target_processors = 2;
   int workers = 2;
   std::uint64_t seed = 1;
   double edge_prob = 0.3;
   double crossover_prob = 0.8;
   double mutation_prob = 0.02;
};

struct BenchSuite {
   std::string name;
   std::vector<BenchCell> cells;
};

inline constexpr std::string_view kCsvHeader =
     "mode,pop,gens,tasks,m,workers,seed,reps,mean_wall_ms,best_makespan,"
     "measured_speedup,predicted_speedup_ratio,paper_speedup_form,"
     "cc_estimate_ms,trend_flag";

/// Cell-level speedup classification.
[[nodiscard]] std::string_view trend_flag(double measured_speedup) noexcept;

/// Built-in grids mirroring the three published experiments ("table1",
/// "table2", "table3"), with population and generation counts multiplied by
/// `scale`. `workers` overrides each cell's worker count.
[[nodiscard]] BenchSuite make_suite(std::string_view name, double scale,
                                    std::optional<int> workers = std::nullopt);

struct BenchRow {
   Mode mode = Mode::Sequential;
   BenchCell cell;
   std::size_t reps = 1;
   double mean_wall_ms = 0.0;
   Time best_makespan = 0;
   double measured_speedup = 1.0;
   double predicted_speedup_ratio = 1.0;
   double paper_speedup_form = 1.0;
   double cc_estimate_ms = 0.0;
   std::string trend_flag;
   /// Per-generation best makespans of the last repetition.
   std::vector<Time> history;
};

struct BenchReport {
   std::string suite;
   std::vector<BenchRow> rows;

   [[nodiscard]] std::string to_csv() const;
};

/// Runs every cell in turn (never concurrently), sequential then
/// master-slave, `repetitions` times each with identical seeds.
[[nodiscard]] BenchReport run_benchmark(const BenchSuite& suite,
                                        std::size_t repetitions);

class IoError : public std::runtime_error {
 public:
   using std::runtime_error::runtime_error;
};

/// Throws IoError when the file cannot be written.
void write_report(const BenchReport& report, const std::string& path);

}  // namespace gasched

#endif  // GASCHED_BENCHMARK_HPP_
