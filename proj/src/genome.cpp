#include "gasched/genome.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gasched {

bool is_valid(const Chromosome& c, const TaskGraph& graph) {
   std::vector<char> seen(graph.size(), 0);
   std::size_t count = 0;
   for (const auto& list : c.lists) {
      std::uint32_t prev = 0;
      for (TaskIndex t : list) {
         if (t >= graph.size() || seen[t]) {
            return false;
         }
         seen[t] = 1;
         ++count;
         if (graph.height(t) < prev) {
            return false;
         }
         prev = graph.height(t);
      }
   }
   return count == graph.size();
}

Population init_population(const TaskGraph& graph, int m,
                           std::size_t population_size, Rng& rng) {
   if (population_size < 2) {
      throw ConfigError("population size must be >= 2");
   }
   if (m < 1) {
      throw ConfigError("processor count must be >= 1");
   }
   std::uniform_int_distribution<int> pick_proc(0, m - 1);
   Population pop(population_size);
   for (Individual& ind : pop) {
      ind.chromosome.lists.assign(static_cast<std::size_t>(m), {});
      for (const auto& level : graph.levels()) {
         std::vector<TaskIndex> order = level;
         std::shuffle(order.begin(), order.end(), rng);
         for (TaskIndex t : order) {
            ind.chromosome.lists[static_cast<std::size_t>(pick_proc(rng))]
                 .push_back(t);
         }
      }
   }
   return pop;
}

RouletteWheel::RouletteWheel(const Population& pop) {
   if (pop.empty()) {
      throw std::invalid_argument("cannot select from an empty population");
   }
   cumulative_.reserve(pop.size());
   std::int64_t total = 0;
   for (const Individual& ind : pop) {
      if (!ind.fitness || *ind.fitness < 1) {
         throw std::invalid_argument(
              "selection requires every individual to be evaluated");
      }
      total += *ind.fitness;
      cumulative_.push_back(total);
   }
}

std::size_t RouletteWheel::spin(Rng& rng) const {
   std::uniform_int_distribution<std::int64_t> ticket(0, cumulative_.back() - 1);
   // First individual whose cumulative fitness exceeds the ticket.
   const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), ticket(rng));
   return static_cast<std::size_t>(it - cumulative_.begin());
}

std::pair<std::size_t, std::size_t> select_parents(const RouletteWheel& wheel,
                                                   Rng& rng) {
   const std::size_t first = wheel.spin(rng);
   return {first, wheel.spin(rng)};
}

std::pair<std::size_t, std::size_t> select_parents(const Population& pop,
                                                   Rng& rng) {
   return select_parents(RouletteWheel(pop), rng);
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a,
                                               const Chromosome& b,
                                               const TaskGraph& graph,
                                               std::uint32_t cut) {
   if (a.processors() != b.processors()) {
      throw std::invalid_argument("crossover parents differ in processor count");
   }
   const std::size_t m = a.processors();
   Chromosome c1, c2;
   c1.lists.resize(m);
   c2.lists.resize(m);
   auto low = [&](TaskIndex t) { return graph.height(t) <= cut; };
   for (std::size_t p = 0; p < m; ++p) {
      const auto& la = a.lists[p];
      const auto& lb = b.lists[p];
      // Lists are height-sorted, so the low part is a prefix.
      auto split_a = std::partition_point(la.begin(), la.end(), low);
      auto split_b = std::partition_point(lb.begin(), lb.end(), low);
      c1.lists[p].assign(la.begin(), split_a);
      c1.lists[p].insert(c1.lists[p].end(), split_b, lb.end());
      c2.lists[p].assign(lb.begin(), split_b);
      c2.lists[p].insert(c2.lists[p].end(), split_a, la.end());
   }
   return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                            const Chromosome& b,
                                            const TaskGraph& graph, Rng& rng) {
   std::uniform_int_distribution<std::uint32_t> pick_cut(0, graph.max_height());
   return crossover_at(a, b, graph, pick_cut(rng));
}

Chromosome mutate(Chromosome c, const TaskGraph& graph, Rng& rng) {
   const auto& levels = graph.levels();
   std::vector<std::uint32_t> candidates;
   for (std::uint32_t h = 0; h < levels.size(); ++h) {
      if (levels[h].size() >= 2) {
         candidates.push_back(h);
      }
   }
   if (candidates.empty()) {
      return c;
   }
   std::uniform_int_distribution<std::size_t> pick_level(
        0, candidates.size() - 1);
   const auto& level = levels[candidates[pick_level(rng)]];
   std::uniform_int_distribution<std::size_t> pick_first(0, level.size() - 1);
   std::uniform_int_distribution<std::size_t> pick_second(0, level.size() - 2);
   const std::size_t i = pick_first(rng);
   std::size_t j = pick_second(rng);
   if (j >= i) {
      ++j;
   }
   const TaskIndex x = level[i];
   const TaskIndex y = level[j];
   for (auto& list : c.lists) {
      for (TaskIndex& t : list) {
         if (t == x) {
            t = y;
         } else if (t == y) {
            t = x;
         }
      }
   }
   return c;
}

}  // namespace gasched
