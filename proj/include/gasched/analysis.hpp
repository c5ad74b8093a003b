#ifndef GASCHED_ANALYSIS_HPP_
#define GASCHED_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>

#include "gasched/taskgraph.hpp"

namespace gasched {

/// Cost model of a master-slave GA run. All costs are integer time units.
struct ComplexityModel {
   std::int64_t population = 1;   // P
   std::int64_t generations = 1;  // G
   double crossover_prob = 0.0;   // Pc
   double mutation_prob = 0.0;    // Pm
   std::int64_t t_fitness = 1;
   std::int64_t t_crossover = 0;
   std::int64_t t_mutation = 0;
   std::int64_t workers = 1;  // nP
   std::int64_t communication = 0;  // CC

   void validate() const;
};

struct SequentialCost {
   /// P * G * t_fitness * (Pc * t_crossover + Pm * t_mutation)
   double full = 0.0;
   /// P * G * t_fitness
   std::int64_t simplified = 0;
};

[[nodiscard]] SequentialCost sequential_cost(const ComplexityModel& model);

/// P * G * t_fitness / nP + CC
[[nodiscard]] double parallel_cost(const ComplexityModel& model);

struct SpeedupPrediction {
   /// sequential simplified cost / parallel cost
   double ratio = 1.0;
   /// The closed form nP - CC. Agrees with `ratio` only when CC = 0.
   double closed_form = 1.0;
};

[[nodiscard]] SpeedupPrediction predicted_speedup(const ComplexityModel& model);

struct CostOptimality {
   /// nP * parallel cost = P * G * t_fitness + CC * nP
   std::int64_t cost = 0;
   bool is_optimal = false;
};

/// Optimal when the coordination term CC * nP is at most `threshold` times
/// the sequential work.
[[nodiscard]] CostOptimality cost_optimality(const ComplexityModel& model,
                                             double threshold = 0.1);

inline constexpr std::size_t kOracleMaxTasks = 10;
inline constexpr int kOracleMaxProcessors = 3;

/// Minimum decoded makespan over every valid chromosome of `graph` with `m`
/// lists. Exponential; refuses instances above the size cap with ConfigError.
[[nodiscard]] Time exhaustive_optimal(const TaskGraph& graph, int m);

}  // namespace gasched

#endif  // GASCHED_ANALYSIS_HPP_
