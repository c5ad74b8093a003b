#include "doctest.h"

#include <algorithm>
#include <random>

#include "gasched/taskgraph.hpp"
#include "oracles.hpp"

using namespace gasched;

namespace {

TaskGraph diamond() {
   return parse_graph(
        "task a 1\ntask b 2\ntask c 3\ntask d 4\n"
        "edge a b\nedge a c\nedge b d\nedge c d\n");
}

GraphError::Kind error_kind(std::string_view text) {
   try {
      (void)parse_graph(text);
   } catch (const GraphError& e) {
      return e.kind();
   }
   FAIL("expected a GraphError");
   return GraphError::Kind::Syntax;
}

}  // namespace

TEST_CASE("parse minimal instances") {
   const TaskGraph one = parse_graph("task a 3");
   CHECK(one.size() == 1);
   CHECK(one.edges().empty());
   CHECK(one.time(0) == 3);

   const TaskGraph chain = parse_graph("task a 3\ntask b 2\nedge a b");
   CHECK(chain.size() == 2);
   REQUIRE(chain.edges().size() == 1);
   CHECK(chain.edges()[0] == Edge{0, 1});
   CHECK(chain.preds(1) == std::vector<TaskIndex>{0});
}

TEST_CASE("parse ignores comments and blanks, accepts forward references") {
   const TaskGraph g = parse_graph(
        "# header\n\nedge x y\n   \ntask y 2\r\n  # indented comment\ntask x 1\n");
   CHECK(g.size() == 2);
   CHECK(g.task(0).id == "y");
   CHECK(g.height(g.index_of("y")) == 1);
}

TEST_CASE("two-task cycle is reported with both ids") {
   try {
      (void)parse_graph("task a 1\ntask b 1\nedge a b\nedge b a");
      FAIL("cycle not detected");
   } catch (const GraphError& e) {
      CHECK(e.kind() == GraphError::Kind::Cycle);
      auto ids = e.cycle();
      std::sort(ids.begin(), ids.end());
      CHECK(ids == std::vector<std::string>{"a", "b"});
   }
}

TEST_CASE("cycle inside a larger graph names only the cycle") {
   try {
      (void)parse_graph(
           "task s 1\ntask a 1\ntask b 1\ntask c 1\ntask z 1\n"
           "edge s a\nedge a b\nedge b c\nedge c a\nedge c z\n");
      FAIL("cycle not detected");
   } catch (const GraphError& e) {
      auto ids = e.cycle();
      std::sort(ids.begin(), ids.end());
      CHECK(ids == std::vector<std::string>{"a", "b", "c"});
   }
   CHECK(error_kind("task a 1\nedge a a") == GraphError::Kind::Cycle);
}

TEST_CASE("parse errors") {
   CHECK(error_kind("task a") == GraphError::Kind::Syntax);
   CHECK(error_kind("task a 1 2") == GraphError::Kind::Syntax);
   CHECK(error_kind("task a x") == GraphError::Kind::Syntax);
   CHECK(error_kind("task a 1.5") == GraphError::Kind::Syntax);
   CHECK(error_kind("node a 1") == GraphError::Kind::Syntax);
   CHECK(error_kind("task a 1\ntask a 2") == GraphError::Kind::DuplicateTask);
   CHECK(error_kind("task a 1\nedge a b") == GraphError::Kind::UnknownTask);
   CHECK(error_kind("task a 0") == GraphError::Kind::BadTime);
   CHECK(error_kind("task a -4") == GraphError::Kind::BadTime);
}

TEST_CASE("parse errors carry the line number") {
   try {
      (void)parse_graph("task a 1\n\n# c\ntask a 2\n");
      FAIL("expected error");
   } catch (const GraphError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).starts_with("line 4:"));
   }
   try {
      (void)parse_graph("task a 1\nedge a nope\n");
      FAIL("expected error");
   } catch (const GraphError& e) {
      CHECK(e.line() == 2);
   }
}

TEST_CASE("programmatic construction validates too") {
   CHECK_THROWS_AS(TaskGraph({{"a", 0}}, {}), GraphError);
   CHECK_THROWS_AS(TaskGraph({{"a", 1}, {"a", 1}}, {}), GraphError);
   CHECK_THROWS_AS(TaskGraph({{"a", 1}}, {{"a", "b"}}), GraphError);
}

TEST_CASE("compute_heights") {
   CHECK(compute_heights(parse_graph("task a 5")) == HeightMap{{"a", 0}});
   CHECK(compute_heights(parse_graph(
              "task a 1\ntask b 1\ntask c 1\nedge a b\nedge b c")) ==
         HeightMap{{"a", 0}, {"b", 1}, {"c", 2}});
   CHECK(compute_heights(diamond()) ==
         HeightMap{{"a", 0}, {"b", 1}, {"c", 1}, {"d", 2}});
}

TEST_CASE("lower_bounds") {
   const TaskGraph chain = parse_graph("task a 3\ntask b 2\nedge a b");
   CHECK(lower_bounds(chain, 2).critical_path == 5);
   CHECK(lower_bounds(chain, 2).work_bound == 3);

   const TaskGraph single = parse_graph("task a 7");
   for (int m = 1; m <= 8; ++m) {
      CHECK(lower_bounds(single, m).critical_path == 7);
      CHECK(lower_bounds(single, m).work_bound == (7 + m - 1) / m);
   }

   const TaskGraph pair = parse_graph("task x 4\ntask y 4");
   CHECK(lower_bounds(pair, 2).critical_path == 4);
   CHECK(lower_bounds(pair, 2).work_bound == 4);

   CHECK_THROWS_AS((void)lower_bounds(chain, 0), ConfigError);
}

TEST_CASE("random_dag contract") {
   const TaskGraph one = random_dag(1, 0.9, 1, 5, 3);
   CHECK(one.size() == 1);
   CHECK(one.edges().empty());

   const TaskGraph sparse = random_dag(10, 0.0, 1, 5, 3);
   CHECK(sparse.size() == 10);
   CHECK(sparse.edges().empty());

   const TaskGraph dense = random_dag(10, 1.0, 2, 2, 3);
   CHECK(dense.edges().size() == 45);
   CHECK(dense.max_height() == 9);

   CHECK(random_dag(30, 0.2, 1, 10, 99) == random_dag(30, 0.2, 1, 10, 99));
   CHECK_FALSE(random_dag(30, 0.2, 1, 10, 99) == random_dag(30, 0.2, 1, 10, 98));

   CHECK_THROWS_AS((void)random_dag(0, 0.5, 1, 2, 1), ConfigError);
   CHECK_THROWS_AS((void)random_dag(5, 1.5, 1, 2, 1), ConfigError);
   CHECK_THROWS_AS((void)random_dag(5, -0.1, 1, 2, 1), ConfigError);
   CHECK_THROWS_AS((void)random_dag(5, 0.5, 0, 2, 1), ConfigError);
   CHECK_THROWS_AS((void)random_dag(5, 0.5, 5, 2, 1), ConfigError);
}

TEST_CASE("serialization") {
   CHECK(serialize_graph(parse_graph("task a 3")) == "task a 3\n");
   CHECK(parse_graph(serialize_graph(diamond())) == diamond());

   const std::string canonical =
        "task a 1\ntask b 2\ntask c 3\nedge a b\nedge a c\nedge b c\n";
   CHECK(serialize_graph(parse_graph(canonical)) == canonical);

   // Messy input normalizes to tasks-then-edges in input order.
   CHECK(serialize_graph(parse_graph("edge a b\n# x\ntask b 2\n\ntask a  1\n")) ==
         "task b 2\ntask a 1\nedge a b\n");
}

TEST_CASE("property: random graphs round-trip and satisfy height invariants") {
   std::mt19937_64 rng(12345);
   for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      const double p = static_cast<double>(rng() % 101) / 100.0;
      const TaskGraph g = random_dag(n, p, 1, 1 + rng() % 20, rng());
      CHECK(parse_graph(serialize_graph(g)) == g);
      CHECK(g.heights() == oracle::heights(g));
      for (const Edge& e : g.edges()) {
         CHECK(g.height(e.pred) < g.height(e.succ));
      }
      for (TaskIndex t = 0; t < g.size(); ++t) {
         CHECK((g.height(t) == 0) == g.preds(t).empty());
      }
   }
}

TEST_CASE("property: critical path matches path enumeration; bounds monotone") {
   std::mt19937_64 rng(777);
   for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 12;
      const TaskGraph g = random_dag(n, 0.35, 1, 9, rng());
      const int m = 1 + static_cast<int>(rng() % 4);
      const LowerBounds b = lower_bounds(g, m);
      CHECK(b.critical_path == oracle::critical_path(g));

      std::vector<Task> tasks = g.tasks();
      std::vector<std::pair<std::string, std::string>> edges;
      for (const Edge& e : g.edges()) {
         edges.emplace_back(g.task(e.pred).id, g.task(e.succ).id);
      }
      // Adding a task never lowers the work bound.
      auto more_tasks = tasks;
      more_tasks.push_back({"extra", 1 + static_cast<Time>(rng() % 9)});
      CHECK(lower_bounds(TaskGraph(more_tasks, edges), m).work_bound >=
            b.work_bound);
      // Adding a forward edge (keeps acyclicity) never lowers the path bound.
      if (n >= 2) {
         std::size_t i = rng() % (n - 1);
         std::size_t j = i + 1 + rng() % (n - 1 - i);
         auto more_edges = edges;
         more_edges.emplace_back(tasks[i].id, tasks[j].id);
         CHECK(lower_bounds(TaskGraph(tasks, more_edges), m).critical_path >=
               b.critical_path);
      }
   }
}
