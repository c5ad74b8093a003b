#ifndef GASCHED_ENGINE_HPP_
#define GASCHED_ENGINE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gasched/genome.hpp"
#include "gasched/taskgraph.hpp"

namespace gasched {

struct GAConfig {
   std::size_t population_size = 100;  // P
   std::size_t generations = 100;      // G
   double crossover_prob = 0.8;        // Pc
   double mutation_prob = 0.02;        // Pm
   int target_processors = 2;          // m, processors of the schedule
   int workers = 1;                    // nP, fitness-evaluation threads
   std::uint64_t seed = 1;

   /// Throws ConfigError naming the first violated bound.
   void validate() const;
};

/// Sequential evaluates fitness on the master thread; MasterSlave splits
/// each evaluation round across `workers` threads and waits for all of them.
enum class Mode { Sequential, MasterSlave };

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;

struct GAResult {
   Chromosome best_chromosome;
   Time best_makespan = 0;
   /// Best makespan after each generation.
   std::vector<Time> history;
   std::chrono::duration<double> wall_time{};
   std::uint64_t evaluations = 0;
};

/// Runs exactly `config.generations` generations.
[[nodiscard]] GAResult run(const GAConfig& config, const TaskGraph& graph,
                           Mode mode);

/// Like run, but stops once the best makespan has not improved for
/// `patience` consecutive generations.
[[nodiscard]] GAResult run_to_convergence(const GAConfig& config,
                                          const TaskGraph& graph, Mode mode,
                                          std::size_t patience);

}  // namespace gasched

#endif  // GASCHED_ENGINE_HPP_
