#ifndef GASCHED_GENOME_HPP_
#define GASCHED_GENOME_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gasched/taskgraph.hpp"

namespace gasched {

/// The single random stream every operator draws from.
using Rng = std::mt19937_64;

/// One ordered task list per target processor. A valid chromosome
/// partitions the task set, and heights never decrease along a list.
struct Chromosome {
   std::vector<std::vector<TaskIndex>> lists;

   [[nodiscard]] std::size_t processors() const noexcept {
      return lists.size();
   }

   friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Fitness is (total work + 1) - makespan, always >= 1 once set.
struct Individual {
   Chromosome chromosome;
   std::optional<std::int64_t> fitness;
   Time makespan = 0;
};

using Population = std::vector<Individual>;

/// True iff `c` partitions the tasks of `graph` and every list is
/// height-sorted.
[[nodiscard]] bool is_valid(const Chromosome& c, const TaskGraph& graph);

/// Builds P chromosomes: tasks visited in height order (ties shuffled), each
/// appended to a uniformly chosen processor list.
[[nodiscard]] Population init_population(const TaskGraph& graph, int m,
                                         std::size_t population_size,
                                         Rng& rng);

/// Fitness-proportional sampling over a fixed, fully evaluated population.
/// Building the wheel is O(P); each spin is O(log P).
class RouletteWheel {
 public:
   /// Throws std::invalid_argument if `pop` is empty or not evaluated.
   explicit RouletteWheel(const Population& pop);
   [[nodiscard]] std::size_t spin(Rng& rng) const;

 private:
   std::vector<std::int64_t> cumulative_;
};

/// Roulette-wheel selection of two independent parents, proportional to
/// fitness. Returns their indices in `pop`.
[[nodiscard]] std::pair<std::size_t, std::size_t> select_parents(
     const RouletteWheel& wheel, Rng& rng);
[[nodiscard]] std::pair<std::size_t, std::size_t> select_parents(
     const Population& pop, Rng& rng);

/// Height-cut exchange at a fixed cut height: child1 takes the tasks of
/// height <= cut from `a` and the rest from `b` (per processor list), child2
/// the converse.
[[nodiscard]] std::pair<Chromosome, Chromosome> crossover_at(
     const Chromosome& a, const Chromosome& b, const TaskGraph& graph,
     std::uint32_t cut);

/// crossover_at with the cut drawn uniformly from {0, ..., max height}.
[[nodiscard]] std::pair<Chromosome, Chromosome> crossover(
     const Chromosome& a, const Chromosome& b, const TaskGraph& graph,
     Rng& rng);

/// Swaps the positions of two distinct tasks of equal height. The height is
/// drawn uniformly among heights holding at least two tasks; if none does,
/// `c` is returned unchanged and no randomness is consumed.
[[nodiscard]] Chromosome mutate(Chromosome c, const TaskGraph& graph,
                                Rng& rng);

}  // namespace gasched

#endif  // GASCHED_GENOME_HPP_
