#include "gasched/engine.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "gasched/evaluator.hpp"

namespace gasched {

void GAConfig::validate() const {
   if (population_size < 2) {
      throw ConfigError("population size must be >= 2");
   }
   if (generations < 1) {
      throw ConfigError("generation count must be >= 1");
   }
   if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
      throw ConfigError("crossover probability must lie in [0, 1]");
   }
   if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
      throw ConfigError("mutation probability must lie in [0, 1]");
   }
   if (target_processors < 1) {
      throw ConfigError("target processor count must be >= 1");
   }
   if (workers < 1) {
      throw ConfigError("worker count must be >= 1");
   }
}

std::string_view to_string(Mode mode) noexcept {
   return mode == Mode::Sequential ? "seq" : "par";
}

namespace {

// Lowest makespan; ties go to the lowest index.
std::size_t best_index(const Population& pop) {
   std::size_t best = 0;
   for (std::size_t i = 1; i < pop.size(); ++i) {
      if (pop[i].makespan < pop[best].makespan) {
         best = i;
      }
   }
   return best;
}

std::size_t worst_index(const Population& pop) {
   std::size_t worst = 0;
   for (std::size_t i = 1; i < pop.size(); ++i) {
      if (pop[i].makespan > pop[worst].makespan) {
         worst = i;
      }
   }
   return worst;
}

// Master phase of one generation: P offspring from selection, crossover and
// mutation. Every random draw happens here, in a fixed order, so the
// evaluation mode can never influence the trajectory.
Population breed(const Population& parents, const TaskGraph& graph,
                 const GAConfig& config, Rng& rng) {
   std::bernoulli_distribution crossover_coin(config.crossover_prob);
   std::bernoulli_distribution mutation_coin(config.mutation_prob);
   const std::size_t target = config.population_size;

   const RouletteWheel wheel(parents);
   Population offspring;
   offspring.reserve(target + 1);
   while (offspring.size() < target) {
      auto [i, j] = select_parents(wheel, rng);
      const Chromosome& a = parents[i].chromosome;
      const Chromosome& b = parents[j].chromosome;
      if (crossover_coin(rng)) {
         auto [c1, c2] = crossover(a, b, graph, rng);
         offspring.push_back({std::move(c1), std::nullopt, 0});
         offspring.push_back({std::move(c2), std::nullopt, 0});
      } else {
         offspring.push_back({a, std::nullopt, 0});
         offspring.push_back({b, std::nullopt, 0});
      }
   }
   offspring.resize(target);  // odd P drops the last second child
   for (Individual& ind : offspring) {
      if (mutation_coin(rng)) {
         ind.chromosome = mutate(std::move(ind.chromosome), graph, rng);
      }
   }
   return offspring;
}

GAResult evolve(const GAConfig& config, const TaskGraph& graph, Mode mode,
                std::size_t patience) {
   config.validate();
   const auto started = std::chrono::steady_clock::now();

   std::unique_ptr<WorkerPool> pool;
   if (mode == Mode::MasterSlave) {
      pool = std::make_unique<WorkerPool>(
           static_cast<std::size_t>(config.workers));
   }

   Rng rng(config.seed);
   GAResult result;
   Population pop = init_population(graph, config.target_processors,
                                    config.population_size, rng);
   evaluate_population(pop, graph, pool.get());
   result.evaluations = pop.size();

   Time best_so_far = pop[best_index(pop)].makespan;
   std::size_t stale = 0;
   result.history.reserve(config.generations);
   for (std::size_t gen = 0; gen < config.generations; ++gen) {
      Population next = breed(pop, graph, config, rng);
      evaluate_population(next, graph, pool.get());
      result.evaluations += next.size();

      next[worst_index(next)] = pop[best_index(pop)];
      pop = std::move(next);

      const Time best = pop[best_index(pop)].makespan;
      result.history.push_back(best);
      if (best < best_so_far) {
         best_so_far = best;
         stale = 0;
      } else if (++stale >= patience) {
         break;
      }
   }

   const Individual& champion = pop[best_index(pop)];
   result.best_chromosome = champion.chromosome;
   result.best_makespan = champion.makespan;
   result.wall_time = std::chrono::steady_clock::now() - started;
   return result;
}

}  // namespace

GAResult run(const GAConfig& config, const TaskGraph& graph, Mode mode) {
   return evolve(config, graph, mode, config.generations);
}

GAResult run_to_convergence(const GAConfig& config, const TaskGraph& graph,
                            Mode mode, std::size_t patience) {
   if (patience < 1) {
      throw ConfigError("patience must be >= 1");
   }
   return evolve(config, graph, mode, patience);
}

}  // namespace gasched
