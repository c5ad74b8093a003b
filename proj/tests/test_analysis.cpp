#include "doctest.h"

#include <random>

#include "gasched/analysis.hpp"
#include "gasched/engine.hpp"
#include "oracles.hpp"

using namespace gasched;

namespace {

ComplexityModel model(std::int64_t P, std::int64_t G, std::int64_t t,
                      std::int64_t nP = 1, std::int64_t cc = 0) {
   ComplexityModel m;
   m.population = P;
   m.generations = G;
   m.t_fitness = t;
   m.workers = nP;
   m.communication = cc;
   return m;
}

}  // namespace

TEST_CASE("sequential cost") {
   CHECK(sequential_cost(model(1, 1, 1)).simplified == 1);
   CHECK(sequential_cost(model(10000, 2, 1)).simplified == 20000);

   ComplexityModel m = model(50, 7, 3);
   m.crossover_prob = 0.8;
   m.t_crossover = 5;
   m.mutation_prob = 0.1;
   m.t_mutation = 2;
   const SequentialCost base = sequential_cost(m);
   CHECK(base.full == doctest::Approx(50.0 * 7 * 3 * (0.8 * 5 + 0.1 * 2)));
   m.generations *= 2;
   const SequentialCost doubled = sequential_cost(m);
   CHECK(doubled.simplified == 2 * base.simplified);
   CHECK(doubled.full == doctest::Approx(2 * base.full));

   CHECK_THROWS_AS((void)sequential_cost(model(0, 1, 1)), ConfigError);
   CHECK_THROWS_AS((void)sequential_cost(model(1, 1, -1)), ConfigError);
}

TEST_CASE("parallel cost") {
   CHECK(parallel_cost(model(30, 4, 2)) ==
         static_cast<double>(sequential_cost(model(30, 4, 2)).simplified));
   CHECK(parallel_cost(model(4, 1, 1, 4)) == 1.0);
   CHECK(parallel_cost(model(100, 3, 2, 3, 5)) ==
         parallel_cost(model(100, 3, 2, 3, 0)) + 5.0);
}

TEST_CASE("predicted speedup") {
   const SpeedupPrediction two = predicted_speedup(model(100, 10, 1, 2));
   CHECK(two.ratio == 2.0);
   CHECK(two.closed_form == 2.0);
   CHECK(predicted_speedup(model(100, 10, 1, 1)).ratio == 1.0);

   const SpeedupPrediction diverging =
        predicted_speedup(model(1000, 10, 1, 4, 500));
   CHECK(diverging.ratio == doctest::Approx(10000.0 / 3000.0));
   // The closed form subtracts a time from a ratio; reported, not used.
   CHECK(diverging.closed_form == 4.0 - 500.0);
}

TEST_CASE("cost optimality") {
   const CostOptimality free = cost_optimality(model(40, 9, 3, 8, 0));
   CHECK(free.cost == sequential_cost(model(40, 9, 3)).simplified);
   CHECK(free.is_optimal);

   // Overhead equal to the work itself.
   const CostOptimality heavy = cost_optimality(model(10, 10, 4, 4, 100));
   CHECK(heavy.cost == 800);
   CHECK_FALSE(heavy.is_optimal);

   CHECK(cost_optimality(model(100, 10, 1, 1, 100)).is_optimal);
   CHECK_FALSE(cost_optimality(model(100, 10, 1, 1, 101)).is_optimal);
   CHECK(cost_optimality(model(100, 10, 1, 1, 101), 0.2).is_optimal);
}

TEST_CASE("property: predicted ratio never exceeds nP") {
   std::mt19937_64 rng(8);
   for (int i = 0; i < 500; ++i) {
      const ComplexityModel m =
           model(1 + rng() % 1000, 1 + rng() % 100, rng() % 10,
                 1 + rng() % 64, rng() % 1000);
      CHECK(predicted_speedup(m).ratio <= static_cast<double>(m.workers));
   }
}

TEST_CASE("exhaustive optimum, small hand cases") {
   CHECK(exhaustive_optimal(parse_graph("task a 7"), 2) == 7);
   CHECK(exhaustive_optimal(parse_graph("task a 3\ntask b 2\nedge a b"), 2) == 5);
   const TaskGraph pair = parse_graph("task x 4\ntask y 4");
   CHECK(exhaustive_optimal(pair, 2) == 4);
   CHECK(exhaustive_optimal(pair, 1) == 8);
}

TEST_CASE("exhaustive optimum enforces its cap") {
   CHECK_THROWS_AS((void)exhaustive_optimal(random_dag(11, 0.2, 1, 3, 1), 2),
                   ConfigError);
   CHECK_THROWS_AS((void)exhaustive_optimal(random_dag(5, 0.2, 1, 3, 1), 4),
                   ConfigError);
   CHECK_THROWS_AS((void)exhaustive_optimal(random_dag(5, 0.2, 1, 3, 1), 0),
                   ConfigError);
   CHECK_NOTHROW((void)exhaustive_optimal(random_dag(10, 0.0, 1, 3, 1), 3));
}

TEST_CASE("property: exhaustive optimum equals brute-force enumeration") {
   std::mt19937_64 rng(4242);
   for (int trial = 0; trial < 120; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const int m = 1 + static_cast<int>(rng() % 3);
      const double p = static_cast<double>(rng() % 60) / 100.0;
      const TaskGraph g = random_dag(n, p, 1, 10, rng());
      const Time best = exhaustive_optimal(g, m);
      CAPTURE(serialize_graph(g));
      CAPTURE(m);
      CHECK(best == oracle::brute_force_optimal(g, m));
      CHECK(best >= lower_bounds(g, m).max());
   }
}

TEST_CASE("property: GA never beats the oracle") {
   std::mt19937_64 rng(11);
   for (int trial = 0; trial < 15; ++trial) {
      const TaskGraph g = random_dag(2 + rng() % 7, 0.3, 1, 10, rng());
      GAConfig c;
      c.population_size = 20;
      c.generations = 20;
      c.target_processors = 2;
      c.seed = rng();
      CHECK(run(c, g, Mode::Sequential).best_makespan >= exhaustive_optimal(g, 2));
   }
}
